#include "gffmod/factor.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gffmod {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<double> to_doubles(const RationalVector& v) {
    std::vector<double> out;
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
}

}  // namespace

FactorEvaluator FactorEvaluator::build(const ShellForm& form, const RootProfile& at, const RootProfile& mirror,
                                       double tol) {
    if (at.degenerate || mirror.degenerate) throw NumericalError("factor requested at a degenerate phat");
    if (!is_mirror_pair(at, mirror, tol)) throw NumericalError("root profiles at phat and -phat are not mirrored");

    const UnivariateInstance instance = instantiate(form, at.phat);
    FactorEvaluator fe;
    fe.n_ = form.n;
    fe.phat_ = at.phat;
    if (instance.coefficients.empty()) throw ModelError("Q vanishes identically");
    const Rational& lead = instance.coefficients.back();
    if (lead < 0) throw ModelError("negative leading coefficient of Q: the weight is negative on the shell");
    fe.scalar_ = std::sqrt(lead.get_d());

    for (const auto& c : at.clusters) {
        if (c.real) {
            fe.roots_.insert(fe.roots_.end(), static_cast<std::size_t>(c.multiplicity / 2), c.value);
            fe.real_roots_.push_back(c.value.real());
        } else if (c.value.imag() < 0) {
            fe.roots_.insert(fe.roots_.end(), static_cast<std::size_t>(c.multiplicity), c.value);
        }
    }
    if (2 * fe.roots_.size() != instance.coefficients.size() - 1)
        throw NumericalError("half-plane factor degree does not match Q");
    std::sort(fe.roots_.begin(), fe.roots_.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    if (fe.roots_.size() % 2 == 1) fe.phase_ = -kI;
    return fe;
}

Complex FactorEvaluator::operator()(Complex pplus) const {
    if (n_ > 0 && pplus == Complex(0)) throw NumericalError("F has a pole at p+ = 0");
    // Alternate small and large moduli to keep partial products in range.
    Complex product = scalar_ * phase_;
    std::size_t lo = 0, hi = roots_.size();
    bool take_low = true;
    while (lo < hi) {
        const Complex r = take_low ? roots_[lo++] : roots_[--hi];
        product *= pplus - r;
        take_low = !take_low;
    }
    if (n_ > 0) product *= std::pow(kI * pplus, -n_);
    return product;
}

double FactorEvaluator::magnitude_scale(Complex pplus) const {
    double scale = scalar_ * (n_ > 0 ? std::pow(std::abs(pplus), -n_) : 1.0);
    for (const auto& r : roots_) scale *= std::abs(pplus) + std::abs(r);
    return scale;
}

double FactorEvaluator::real_root_proximity(double pplus) const {
    double best = std::numeric_limits<double>::infinity();
    for (double r : real_roots_) {
        const double denom = std::abs(pplus) + std::abs(r);
        best = std::min(best, denom == 0 ? 0.0 : std::abs(pplus - r) / denom);
    }
    return best;
}

FactorPair make_factor_pair(const ShellForm& form, std::span<const Rational> phat, double tol) {
    RationalVector negated;
    for (const auto& x : phat) negated.push_back(-x);
    const RootProfile at = root_profile(form, phat, tol);
    const RootProfile mirror = root_profile(form, negated, tol);
    return {FactorEvaluator::build(form, at, mirror, tol), FactorEvaluator::build(form, mirror, at, tol)};
}

SymmetryReport check_symmetry(const FactorEvaluator& at, const FactorEvaluator& mirror,
                              std::span<const double> samples, double tol) {
    SymmetryReport report;
    for (double p : samples) {
        const Complex lhs = mirror(Complex(-p, 0));
        const Complex rhs = std::conj(at(Complex(p, 0)));
        const double scale = std::max(at.magnitude_scale(p), std::numeric_limits<double>::min());
        report.max_deviation = std::max(report.max_deviation, std::abs(lhs - rhs) / scale);
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

double reconstruction_error(const ShellForm& form, const FactorEvaluator& at, const FactorEvaluator& mirror,
                            std::span<const double> samples) {
    const auto phat = to_doubles(at.phat());
    double worst = 0.0;
    for (double p : samples) {
        const Complex product = at(Complex(p, 0)) * mirror(Complex(-p, 0));
        const double target = shell_value(form, p, phat);
        const double scale =
            std::max(at.magnitude_scale(p) * mirror.magnitude_scale(-p), std::numeric_limits<double>::min());
        worst = std::max(worst, std::abs(product - target) / scale);
    }
    return worst;
}

}  // namespace gffmod
