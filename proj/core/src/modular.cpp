#include "gffmod/modular.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gffmod {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
// Nodes this close to a real zero of F carry no reliable prefactor.
constexpr double kExcludeProximity = 1e-12;
constexpr double kWarnProximity = 1e-6;

Complex checked_ratio(Complex num, Complex den, const FactorEvaluator& fe, double pplus) {
    if (den == Complex(0)) {
        std::string msg = "F vanishes at p+ = " + format_complex(pplus);
        if (!fe.roots().empty()) msg += " (real root of Q on the real line)";
        throw NumericalError(msg);
    }
    return num / den;
}

double phat_square(std::span<const double> phat) {
    double s = 0;
    for (double x : phat) s += x * x;
    return s;
}

// Raw 53-bit draws keep states identical across standard libraries.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Complex delta_prefactor(const FactorEvaluator& at, const FactorEvaluator& mirror, double t, double pplus, Side side) {
    if (t == 0) return 1.0;
    if (side == Side::right) {
        const double scaled = std::exp(kTwoPi * t) * pplus;
        return checked_ratio(at(scaled), at(pplus), at, pplus);
    }
    const double scaled = -std::exp(-kTwoPi * t) * pplus;
    return checked_ratio(mirror(scaled), mirror(-pplus), mirror, -pplus);
}

Complex j_prefactor(const FactorEvaluator& at, const FactorEvaluator& mirror, double pplus, Side side) {
    if (side == Side::right) return checked_ratio(at(-pplus), at(pplus), at, pplus);
    return checked_ratio(mirror(pplus), mirror(-pplus), mirror, -pplus);
}

// ---------------------------------------------------------------------------

Lattice::Lattice(const ShellForm& form, const LatticeConfig& config) : form_(form), config_(config) {
    if (config_.pplus_points < 2) throw DimensionError("lattice needs at least two p+ points");
    if (config_.phat_points < 1 || config_.phat_points % 2 == 0)
        throw DimensionError("phat axis point count must be odd");

    const double pmin = config_.pplus_min.value_or(std::sqrt(form_.mass2.get_d()) / 8 + 0.125);
    pplus_.resize(config_.pplus_points);
    for (int i = 0; i < config_.pplus_points; ++i) pplus_[i] = pmin * std::exp(i * config_.log_step);

    // Axis values -extent .. extent, odometer order with the first axis slowest.
    const int axes = form_.dimension - 2;
    const int per_axis = config_.phat_points;
    RationalVector axis_values;
    const int half = per_axis / 2;
    for (int v = -half; v <= half; ++v)
        axis_values.push_back(half == 0 ? Rational(0) : Rational(config_.phat_extent * v / half));
    int count = 1;
    for (int a = 0; a < axes; ++a) count *= per_axis;
    phat_grid_.resize(count);
    mirror_.resize(count);
    for (int j = 0; j < count; ++j) {
        int rest = j, mirror_index = 0, stride = 1;
        RationalVector point(axes);
        for (int a = axes - 1; a >= 0; --a) {
            const int digit = rest % per_axis;
            rest /= per_axis;
            point[a] = axis_values[digit];
            mirror_index += (per_axis - 1 - digit) * stride;
            stride *= per_axis;
        }
        phat_grid_[j] = std::move(point);
        mirror_[j] = mirror_index;
    }

    std::vector<RootProfile> profiles;
    profiles.reserve(count);
    for (const auto& p : phat_grid_) profiles.push_back(root_profile(form_, p, config_.cluster_tol));
    factors_.resize(count);
    for (int j = 0; j < count; ++j) {
        if (profiles[j].degenerate) continue;
        factors_[j] = FactorEvaluator::build(form_, profiles[j], profiles[mirror_[j]], config_.cluster_tol);
    }

    const std::size_t total = size();
    weight_.assign(total, 0.0);
    quadrature_.assign(total, 0.0);
    excluded_.assign(total, false);
    const double h = config_.log_step;
    for (int j = 0; j < count; ++j) {
        if (!factors_[j] || !factors_[mirror_[j]]) continue;
        const FactorEvaluator& at = *factors_[j];
        const FactorEvaluator& mirror = *factors_[mirror_[j]];
        for (int i = 0; i < config_.pplus_points; ++i) {
            const double p = pplus_[i];
            const double proximity = at.real_root_proximity(p);
            const std::size_t k = index(i, j);
            if (proximity < kWarnProximity) ++near_root_nodes_;
            if (proximity <= kExcludeProximity) {
                excluded_[k] = true;
                continue;
            }
            const Complex w = at(p) * mirror(-p) / p;
            if (w.real() < -1e-12 * std::max(1.0, std::abs(w)))
                throw ModelError("negative shell measure on the lattice");
            weight_[k] = std::max(w.real(), 0.0);
            const double trapezoid = (i == 0 || i == config_.pplus_points - 1) ? 0.5 : 1.0;
            quadrature_[k] = weight_[k] * p * h * trapezoid;
        }
    }
}

std::vector<double> Lattice::phat_values(int j) const {
    std::vector<double> out;
    for (const auto& x : phat_grid_[j]) out.push_back(x.get_d());
    return out;
}

const FactorEvaluator& Lattice::factor(int j) const {
    if (!factors_[j]) throw NumericalError("no factor at a degenerate phat");
    return *factors_[j];
}

std::vector<std::string> Lattice::warnings() const {
    std::vector<std::string> out;
    const auto degenerate_count = std::count_if(factors_.begin(), factors_.end(), [](const auto& f) { return !f; });
    if (degenerate_count > 0)
        out.push_back(std::to_string(degenerate_count) + " degenerate phat lattice points carry zero weight");
    if (near_root_nodes_ > 0)
        out.push_back(std::to_string(near_root_nodes_) + " lattice nodes lie within " +
                      format_complex(kWarnProximity) + " (relative) of a real zero of F");
    return out;
}

// ---------------------------------------------------------------------------

LatticeState LatticeState::zero(std::shared_ptr<const Lattice> lattice) {
    LatticeState s;
    s.values.assign(lattice->size(), Complex(0));
    s.lattice = std::move(lattice);
    return s;
}

Complex inner_product(const LatticeState& phi, const LatticeState& psi) {
    if (phi.lattice != psi.lattice) throw DimensionError("states live on different lattices");
    const Lattice& lat = *phi.lattice;
    Complex sum = 0;
    for (int i = 0; i < lat.pplus_count(); ++i)
        for (int j = 0; j < lat.phat_count(); ++j) sum += std::conj(phi.at(i, j)) * psi.at(i, j) * lat.quadrature(i, j);
    return sum;
}

double norm(const LatticeState& phi) { return std::sqrt(std::max(inner_product(phi, phi).real(), 0.0)); }

LatticeState apply_flow(const LatticeState& state, int k, Side side) {
    const Lattice& lat = *state.lattice;
    const int N = lat.pplus_count();
    if (std::abs(k) >= N) throw DimensionError("flow shift leaves the lattice");
    LatticeState out = LatticeState::zero(state.lattice);
    for (int j = 0; j < lat.phat_count(); ++j) {
        if (lat.degenerate(j)) continue;
        const FactorEvaluator& at = lat.factor(j);
        const FactorEvaluator& mirror = lat.factor(lat.mirror_index(j));
        for (int i = 0; i < N; ++i) {
            if (lat.excluded(i, j)) continue;
            const int src = side == Side::right ? i + k : i - k;
            if (src < 0 || src >= N) continue;
            const Complex value = state.at(src, j);
            if (value == Complex(0)) continue;
            const double p = lat.pplus(i);
            const double q = lat.pplus(src);
            const Complex pre = src == i                ? Complex(1)
                                  : side == Side::right ? at(q) / at(p)
                                                        : mirror(-q) / mirror(-p);
            out.at(i, j) = pre * value;
        }
    }
    return out;
}

LatticeState apply_conjugation(const LatticeState& state, Side side) {
    const Lattice& lat = *state.lattice;
    LatticeState out = LatticeState::zero(state.lattice);
    for (int j = 0; j < lat.phat_count(); ++j) {
        const int mj = lat.mirror_index(j);
        if (lat.degenerate(j) || lat.degenerate(mj)) continue;
        const FactorEvaluator& at = lat.factor(j);
        const FactorEvaluator& mirror = lat.factor(mj);
        for (int i = 0; i < lat.pplus_count(); ++i) {
            if (lat.excluded(i, j)) continue;
            const Complex value = state.at(i, mj);
            if (value == Complex(0)) continue;
            out.at(i, j) = j_prefactor(at, mirror, lat.pplus(i), side) * std::conj(value);
        }
    }
    return out;
}

LatticeState apply_translation(const LatticeState& state, std::span<const double> a) {
    const Lattice& lat = *state.lattice;
    const int d = lat.form().dimension;
    if (static_cast<int>(a.size()) != d) throw DimensionError("translation vector has the wrong dimension");
    const double a_plus = a[0] + a[1];
    const double a_minus = a[0] - a[1];
    const double m2 = lat.form().mass2.get_d();
    LatticeState out = LatticeState::zero(state.lattice);
    for (int j = 0; j < lat.phat_count(); ++j) {
        const auto phat = lat.phat_values(j);
        double transverse = 0;
        for (int k = 0; k < d - 2; ++k) transverse += phat[k] * a[k + 2];
        const double p2 = phat_square(phat);
        for (int i = 0; i < lat.pplus_count(); ++i) {
            const double p = lat.pplus(i);
            const double p_minus = (p2 + m2) / p;
            const double phase = 0.5 * p * a_minus + 0.5 * p_minus * a_plus - transverse;
            out.at(i, j) = std::polar(1.0, phase) * state.at(i, j);
        }
    }
    return out;
}

LatticeState random_state(std::shared_ptr<const Lattice> lattice, std::uint64_t seed, int lo, int hi,
                          std::span<const int> shifts) {
    LatticeState out = LatticeState::zero(lattice);
    const Lattice& lat = *lattice;
    const int N = lat.pplus_count();
    lo = std::max(lo, 0);
    hi = std::min(hi, N);
    std::mt19937_64 rng(seed);
    auto blocked = [&](int i, int j) {
        const int mj = lat.mirror_index(j);
        if (lat.degenerate(j) || lat.degenerate(mj)) return true;
        if (lat.excluded(i, j) || lat.excluded(i, mj)) return true;
        for (int s : shifts) {
            const int target = i - s;
            if (target >= 0 && target < N && (lat.excluded(target, j) || lat.excluded(target, mj))) return true;
        }
        return false;
    };
    for (int i = lo; i < hi; ++i)
        for (int j = 0; j < lat.phat_count(); ++j) {
            const double re = 2 * unit_draw(rng) - 1;
            const double im = 2 * unit_draw(rng) - 1;
            if (!blocked(i, j)) out.at(i, j) = Complex(re, im);
        }
    return out;
}

double check_s_identity(const ShellForm& form, std::span<const TestVector> vectors, double tol) {
    const int axes = form.dimension - 2;
    const RationalVector axis{Rational(-7, 4), Rational(-5, 4), Rational(-3, 4), Rational(-1, 4),
                              Rational(1, 4),  Rational(3, 4),  Rational(5, 4),  Rational(7, 4)};
    const double m2 = form.mass2.get_d();
    constexpr int kPoints = 64;

    int count = 1;
    for (int a = 0; a < axes; ++a) count *= static_cast<int>(axis.size());

    double worst = 0.0;
    for (int j = 0; j < count; ++j) {
        RationalVector phat(axes);
        for (int a = axes - 1, rest = j; a >= 0; --a, rest /= static_cast<int>(axis.size()))
            phat[a] = axis[rest % axis.size()];
        RationalVector neg;
        for (const auto& x : phat) neg.push_back(-x);
        const RootProfile at_profile = root_profile(form, phat, tol);
        const RootProfile mirror_profile = root_profile(form, neg, tol);
        if (at_profile.degenerate) continue;
        const FactorEvaluator at = FactorEvaluator::build(form, at_profile, mirror_profile, tol);
        const FactorEvaluator mirror = FactorEvaluator::build(form, mirror_profile, at_profile, tol);

        std::vector<double> phat_d;
        for (const auto& x : phat) phat_d.push_back(x.get_d());
        const double p2 = phat_square(phat_d);
        for (const auto& v : vectors) {
            // phi(p+, phat) with phat entering only through phat^2.
            auto phi = [&](double p) {
                return std::exp(-p2) * std::polar(1.0, v.a * p - v.b * (p2 + m2) / p);
            };
            for (int k = 0; k < kPoints; ++k) {
                const double p = std::exp2(-3.0 + 6.0 * k / (kPoints - 1));
                if (at.real_root_proximity(p) < kWarnProximity || at.real_root_proximity(-p) < kWarnProximity ||
                    mirror.real_root_proximity(p) < kWarnProximity || mirror.real_root_proximity(-p) < kWarnProximity)
                    continue;
                // delta^{1/2} phi at (p+, -phat), continued to the lower boundary.
                const Complex half = mirror(-p) / mirror(p) * phi(-p);
                const Complex lhs = j_prefactor(at, mirror, p, Side::right) * std::conj(half);
                const Complex rhs = std::conj(phi(-p));
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
    }
    return worst;
}

double check_borchers(const LatticeState& state, std::span<const double> a, int k) {
    const Lattice& lat = *state.lattice;
    const double s = std::exp(k * lat.log_step());
    std::vector<double> boosted(a.begin(), a.end());
    const double a_plus = (a[0] + a[1]) / s;
    const double a_minus = (a[0] - a[1]) * s;
    boosted[0] = 0.5 * (a_plus + a_minus);
    boosted[1] = 0.5 * (a_plus - a_minus);

    const LatticeState lhs = apply_flow(apply_translation(state, a), k);
    const LatticeState rhs = apply_translation(apply_flow(state, k), boosted);
    LatticeState diff = LatticeState::zero(state.lattice);
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] = lhs.values[i] - rhs.values[i];
    const double base = norm(state);
    return base == 0 ? norm(diff) : norm(diff) / base;
}

}  // namespace gffmod
