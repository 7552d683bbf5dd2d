#pragma once

#include "gffmod/roots.hpp"
#include "gffmod/shell.hpp"

#include <span>
#include <vector>

namespace gffmod {

// Pointwise half-plane factor of Q at a fixed phat:
//
//   F(p+) = scalar * phase * (i p+)^(-n) * prod_k (p+ - root_k)
//
// The roots are the lower half-plane roots of Q(., phat) with full
// multiplicity plus half of every real root, so F has no zeros in the open
// upper half plane. scalar = sqrt(leading coefficient of Q(., phat)).
// phase is 1 when deg F is even and -i when it is odd; with it
// F(-p+, -phat) = conj F(p+, phat) and F(p+, phat) F(-p+, -phat) = p+^(-2n) Q
// hold for every parity of deg F.
class FactorEvaluator {
public:
    // `at` and `mirror` are the profiles at phat and -phat. Throws
    // NumericalError on a degenerate or non-mirrored pair and ModelError on a
    // negative leading coefficient.
    static FactorEvaluator build(const ShellForm& form, const RootProfile& at, const RootProfile& mirror,
                                 double tol = kDefaultClusterTolerance);

    Complex operator()(Complex pplus) const;

    int n() const noexcept { return n_; }
    double scalar() const noexcept { return scalar_; }
    Complex phase() const noexcept { return phase_; }
    const std::vector<Complex>& roots() const noexcept { return roots_; }
    const RationalVector& phat() const noexcept { return phat_; }

    // Rounding scale of F(p+): scalar * |p+|^(-n) * prod (|p+| + |root|).
    double magnitude_scale(Complex pplus) const;
    // min_k |p+ - r_k| / (|p+| + |r_k|) over the real roots; +inf if none.
    double real_root_proximity(double pplus) const;

private:
    int n_ = 0;
    double scalar_ = 1.0;
    Complex phase_{1.0, 0.0};
    std::vector<Complex> roots_;  // sorted by modulus
    std::vector<double> real_roots_;
    RationalVector phat_;
};

// Evaluators at phat and -phat, built from independently computed profiles.
struct FactorPair {
    FactorEvaluator at;
    FactorEvaluator mirror;
};

FactorPair make_factor_pair(const ShellForm& form, std::span<const Rational> phat,
                            double tol = kDefaultClusterTolerance);

struct SymmetryReport {
    double max_deviation = 0.0;
    bool pass = true;
};

// max over samples of |F(-p+, -phat) - conj F(p+, phat)| relative to the
// rounding scale of F; pass iff <= tol.
SymmetryReport check_symmetry(const FactorEvaluator& at, const FactorEvaluator& mirror,
                              std::span<const double> samples, double tol = 1e-9);

// max over samples of |F(p+) F_mirror(-p+) - p+^(-2n) Q(p+, phat)| relative to
// the rounding scale of the product.
double reconstruction_error(const ShellForm& form, const FactorEvaluator& at, const FactorEvaluator& mirror,
                            std::span<const double> samples);

}  // namespace gffmod
