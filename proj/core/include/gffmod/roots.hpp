#pragma once

#include "gffmod/rational.hpp"
#include "gffmod/shell.hpp"
#include "gffmod/upoly.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace gffmod {

using Complex = std::complex<double>;

inline constexpr double kDefaultClusterTolerance = 1e-7;

struct RootFinderOptions {
    double precision = 1e-12;  // residual bound relative to sum |a_k| |z|^k
    int max_iterations = 1000;
};

// All roots of sum coeffs[k] z^k by Aberth-Ehrlich simultaneous iteration in
// extended precision. Deterministic: fixed starting circle and sweep order.
// Throws NumericalError for a zero leading coefficient or if the residual
// bound is not met.
std::vector<Complex> find_roots(std::span<const Complex> coeffs, const RootFinderOptions& options = {});
std::vector<Complex> find_roots(std::span<const double> coeffs, const RootFinderOptions& options = {});

// Roots of an exact polynomial, repeated by multiplicity: the multiplicity
// structure comes from the exact square-free decomposition and each
// square-free factor is solved numerically.
std::vector<Complex> exact_roots(const RationalUPoly& poly, const RootFinderOptions& options = {});

struct RootCluster {
    Complex value;
    int multiplicity = 0;
    bool real = false;
};

enum class RootClass { all_real, has_complex };

struct RootProfile {
    RationalVector phat;
    std::vector<RootCluster> clusters;
    bool degenerate = false;
    RootClass classification = RootClass::all_real;
    Complex witness;  // complex root with largest |Im|, upper half plane; only for has_complex

    // Cluster values repeated by multiplicity.
    std::vector<Complex> roots() const;
};

// Groups roots closer than tol * max(1, |root|), marks clusters real when
// |Im| <= tol * max(1, |value|) and, if `check_pairing`, enforces the shell
// structure: real clusters of even multiplicity, complex clusters closed
// under conjugation with equal multiplicity. Throws NumericalError naming the
// offending cluster otherwise.
RootProfile classify(std::span<const Complex> roots, double tol = kDefaultClusterTolerance,
                     bool check_pairing = true);

// Profile of Q(., phat) from the exact instance. Degenerate instances carry
// no roots.
RootProfile root_profile(const ShellForm& form, std::span<const Rational> phat,
                         double tol = kDefaultClusterTolerance);

// Profile at -phat is the negation of the profile at phat.
bool is_mirror_pair(const RootProfile& at, const RootProfile& mirror, double tol = kDefaultClusterTolerance);

struct SturmCount {
    int distinct_real = 0;
    int squarefree_degree = 0;

    bool all_real() const { return distinct_real == squarefree_degree; }
};

// Exact count of distinct real roots via the Sturm chain of the square-free
// part. Throws NumericalError for the zero polynomial.
SturmCount sturm_real_count(const RationalUPoly& poly);

std::string format_complex(Complex z);

}  // namespace gffmod
