#pragma once

#include "gffmod/polynomial.hpp"
#include "gffmod/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace gffmod {

// Light-cone form of a weight polynomial on the mass shell:
//
//   M(p+, (phat^2 + m2)/p+, phat) = p+^(-2n) Q(p+, phat)
//
// with p+- = p0 +- p1 and phat = (p2, ..., p{d-1}). Q lives in d-1 variables,
// variable 0 being p+ and variable k >= 1 being p_{k+1}.
struct ShellForm {
    int dimension = 0;
    Rational mass2;
    int n = 0;
    Polynomial Q{1};

    int pplus_degree() const { return Q.degree_in(0); }
    // Coefficient of the highest power of p+ as a polynomial in phat
    // (same variable layout as Q, with the p+ exponent zero).
    Polynomial leading_coefficient() const;
    // Every term of Q carries the same power of p+.
    bool is_pplus_monomial() const;
};

// Variable names of Q: "pplus", "p2", ..., "p{d-1}".
std::vector<std::string> shell_variable_names(int dimension);

// n is the smallest nonnegative integer making p+^(2n) * M|shell polynomial.
// Throws ModelError if M is not even or mass2 < 0.
ShellForm to_shell_form(const Polynomial& weight, const Rational& mass2);

// Q(., phat) as coefficients in ascending powers of p+. The list always has
// pplus_degree()+1 entries; `degenerate` flags a vanishing top coefficient.
struct UnivariateInstance {
    RationalVector coefficients;
    bool degenerate = false;
};

UnivariateInstance instantiate(const ShellForm& form, std::span<const Rational> phat);
std::vector<double> instantiate(const ShellForm& form, std::span<const double> phat);

// p+^(-2n) Q(p+, phat) in floating point; the reconstruction of M on the shell.
double shell_value(const ShellForm& form, double pplus, std::span<const double> phat);

// The Minkowski point (p0, p1, phat) for shell chart coordinates (p+, phat).
RationalVector shell_point(const Rational& pplus, std::span<const Rational> phat, const Rational& mass2);

}  // namespace gffmod
