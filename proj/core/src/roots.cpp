#include "gffmod/roots.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

namespace gffmod {

namespace {

using LDouble = long double;
using LComplex = std::complex<LDouble>;

constexpr LDouble kLdEps = std::numeric_limits<LDouble>::epsilon();

// Two-term split keeps ~106 bits of the rational before rounding to long double.
LDouble to_long_double(const Rational& q) {
    const double hi = q.get_d();
    const double lo = Rational(q - Rational(hi)).get_d();
    return static_cast<LDouble>(hi) + static_cast<LDouble>(lo);
}

struct HornerResult {
    LComplex value;
    LComplex derivative;
    LDouble magnitude;  // sum |a_k| |z|^k, the rounding scale of value
};

HornerResult horner(std::span<const LComplex> a, LComplex z) {
    LComplex p = a.back(), dp = 0;
    LDouble mag = std::abs(a.back());
    const LDouble az = std::abs(z);
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
        mag = mag * az + std::abs(a[k]);
    }
    return {p, dp, mag};
}

std::vector<LComplex> aberth(std::vector<LComplex> a, const RootFinderOptions& options) {
    std::vector<LComplex> roots;
    // Exact zero roots first.
    while (a.size() > 1 && a.front() == LComplex(0)) {
        roots.emplace_back(0);
        a.erase(a.begin());
    }
    const int n = static_cast<int>(a.size()) - 1;
    if (n <= 0) return roots;

    const LComplex lead = a.back();
    for (auto& c : a) c /= lead;

    LDouble bound = 0;
    for (int k = 0; k < n; ++k)
        bound = std::max(bound, std::pow(std::abs(a[k]), LDouble(1) / static_cast<LDouble>(n - k)));
    const LComplex center = -a[n - 1] / static_cast<LDouble>(n);
    LDouble radius = bound > 0 ? bound : LDouble(1);

    std::vector<LComplex> z(n);
    for (int k = 0; k < n; ++k) {
        const LDouble angle = 2 * std::numbers::pi_v<LDouble> * k / n + LDouble(0.7);
        z[k] = center + std::polar(radius, angle);
    }

    std::vector<bool> settled(n, false);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        bool all_settled = true;
        for (int k = 0; k < n; ++k) {
            if (settled[k]) continue;
            const HornerResult h = horner(a, z[k]);
            if (std::abs(h.value) <= 8 * kLdEps * h.magnitude) {
                settled[k] = true;
                continue;
            }
            all_settled = false;
            LComplex repulsion = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += LDouble(1) / (z[k] - z[j]);
            const LComplex ratio = h.derivative == LComplex(0) ? h.value : h.value / h.derivative;
            const LComplex step = ratio / (LDouble(1) - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) <= kLdEps * std::max(std::abs(z[k]), LDouble(1e-300))) settled[k] = true;
        }
        if (all_settled) break;
    }

    for (int k = 0; k < n; ++k) {
        const HornerResult h = horner(a, z[k]);
        if (!(std::abs(h.value) <= options.precision * h.magnitude))
            throw NumericalError("root finder did not reach the residual bound (residual " +
                                 std::to_string(static_cast<double>(std::abs(h.value) / h.magnitude)) + ")");
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<Complex> to_double(const std::vector<LComplex>& z) {
    std::vector<Complex> out;
    out.reserve(z.size());
    for (const auto& v : z) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return out;
}

double cluster_scale(Complex z) { return std::max(1.0, std::abs(z)); }

int sign_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

std::vector<Complex> find_roots(std::span<const Complex> coeffs, const RootFinderOptions& options) {
    if (coeffs.empty()) throw NumericalError("empty coefficient list");
    if (coeffs.back() == Complex(0)) throw NumericalError("degenerate leading coefficient");
    std::vector<LComplex> a;
    a.reserve(coeffs.size());
    for (const auto& c : coeffs) a.emplace_back(c.real(), c.imag());
    return to_double(aberth(std::move(a), options));
}

std::vector<Complex> find_roots(std::span<const double> coeffs, const RootFinderOptions& options) {
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    return find_roots(std::span<const Complex>(c), options);
}

std::vector<Complex> exact_roots(const RationalUPoly& poly, const RootFinderOptions& options) {
    if (poly.is_zero()) throw NumericalError("the zero polynomial has no root multiset");
    std::vector<Complex> out;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(poly)) {
        std::vector<LComplex> a;
        for (const auto& c : factor.coefficients()) a.emplace_back(to_long_double(c), 0);
        const auto roots = to_double(aberth(std::move(a), options));
        for (int m = 0; m < multiplicity; ++m) out.insert(out.end(), roots.begin(), roots.end());
    }
    return out;
}

std::vector<Complex> RootProfile::roots() const {
    std::vector<Complex> out;
    for (const auto& c : clusters)
        for (int m = 0; m < c.multiplicity; ++m) out.push_back(c.value);
    return out;
}

RootProfile classify(std::span<const Complex> roots, double tol, bool check_pairing) {
    std::vector<Complex> sorted(roots.begin(), roots.end());
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    // Single-linkage clustering.
    const std::size_t n = sorted.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = std::max(cluster_scale(sorted[i]), cluster_scale(sorted[j]));
            if (std::abs(sorted[i] - sorted[j]) <= tol * scale) parent[find(j)] = find(i);
        }

    RootProfile profile;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = profile.clusters.size();
            profile.clusters.push_back({Complex(0), 0, false});
        }
        auto& c = profile.clusters[slot[r]];
        c.value += sorted[i];
        ++c.multiplicity;
    }
    for (auto& c : profile.clusters) {
        c.value /= static_cast<double>(c.multiplicity);
        c.real = std::abs(c.value.imag()) <= tol * cluster_scale(c.value);
        if (c.real) c.value = Complex(c.value.real(), 0.0);
    }

    double best_imag = -1;
    for (const auto& c : profile.clusters) {
        if (c.real) continue;
        profile.classification = RootClass::has_complex;
        if (std::abs(c.value.imag()) > best_imag) {
            best_imag = std::abs(c.value.imag());
            profile.witness = Complex(c.value.real(), std::abs(c.value.imag()));
        }
    }

    if (check_pairing) {
        for (const auto& c : profile.clusters) {
            if (c.real) {
                if (c.multiplicity % 2 != 0)
                    throw NumericalError("real root " + format_complex(c.value) + " has odd multiplicity " +
                                         std::to_string(c.multiplicity));
                continue;
            }
            const bool paired = std::any_of(profile.clusters.begin(), profile.clusters.end(), [&](const RootCluster& o) {
                return !o.real && o.multiplicity == c.multiplicity &&
                       std::abs(o.value - std::conj(c.value)) <= tol * cluster_scale(c.value);
            });
            if (!paired)
                throw NumericalError("complex root " + format_complex(c.value) + " (multiplicity " +
                                     std::to_string(c.multiplicity) + ") has no conjugate partner");
        }
    }
    return profile;
}

RootProfile root_profile(const ShellForm& form, std::span<const Rational> phat, double tol) {
    const UnivariateInstance instance = instantiate(form, phat);
    RootProfile profile;
    if (instance.degenerate) {
        profile.degenerate = true;
    } else if (instance.coefficients.size() > 1) {
        profile = classify(exact_roots(RationalUPoly(instance.coefficients)), tol, true);
    }
    profile.phat.assign(phat.begin(), phat.end());
    return profile;
}

bool is_mirror_pair(const RootProfile& at, const RootProfile& mirror, double tol) {
    if (at.degenerate != mirror.degenerate || at.clusters.size() != mirror.clusters.size()) return false;
    return std::all_of(at.clusters.begin(), at.clusters.end(), [&](const RootCluster& c) {
        return std::any_of(mirror.clusters.begin(), mirror.clusters.end(), [&](const RootCluster& o) {
            return o.multiplicity == c.multiplicity && std::abs(o.value + c.value) <= tol * cluster_scale(c.value);
        });
    });
}

SturmCount sturm_real_count(const RationalUPoly& poly) {
    if (poly.is_zero()) throw NumericalError("Sturm count of the zero polynomial");
    const RationalUPoly sf = squarefree_part(poly);
    SturmCount out;
    out.squarefree_degree = std::max(sf.degree(), 0);
    if (sf.degree() < 1) return out;

    std::vector<RationalUPoly> chain{sf, sf.derivative()};
    while (chain.back().degree() > 0) {
        RationalUPoly rem = divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        // Positive rescaling keeps every sign.
        chain.push_back(rem * Rational(-1 / abs(rem.leading())));
    }
    std::vector<int> at_minus, at_plus;
    for (const auto& p : chain) {
        at_minus.push_back(p.sign_at_infinity(-1));
        at_plus.push_back(p.sign_at_infinity(+1));
    }
    out.distinct_real = sign_variations(at_minus) - sign_variations(at_plus);
    return out;
}

std::string format_complex(Complex z) {
    const double scale = std::max(1.0, std::abs(z));
    char buf[64];
    if (std::abs(z.imag()) <= 1e-12 * scale) std::snprintf(buf, sizeof buf, "%.6g", z.real() == 0 ? 0.0 : z.real());
    else if (std::abs(z.real()) <= 1e-12 * scale) std::snprintf(buf, sizeof buf, "%.6gi", z.imag());
    else std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

}  // namespace gffmod
