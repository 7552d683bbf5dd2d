#pragma once

#include "gffmod/matrix.hpp"
#include "gffmod/rational.hpp"

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gffmod {

using Exponent = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lexicographic with
// variable 0 most significant. Ascending.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial over Q in a fixed number of variables.
//
// Terms never carry a zero coefficient, so two polynomials are equal iff
// their term maps are equal. All arithmetic is exact.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    explicit Polynomial(int dimension);

    static Polynomial constant(int dimension, const Rational& value);
    static Polynomial variable(int dimension, int index);
    static Polynomial monomial(const Exponent& exponent, const Rational& coefficient);

    int dimension() const noexcept { return dimension_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Exponent& exponent) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int variable) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& rhs) const = default;

    // Accumulates coefficient * x^exponent, dropping the term if it cancels.
    // Only meant for building a polynomial before it is shared.
    void add_term(const Exponent& exponent, const Rational& coefficient);

private:
    void require_same_dimension(const Polynomial& rhs) const;

    int dimension_;
    TermMap terms_;
};

std::complex<double> evaluate(const Polynomial& poly, std::span<const std::complex<double>> point);
double evaluate(const Polynomial& poly, std::span<const double> point);
Rational evaluate(const Polynomial& poly, std::span<const Rational> point);

// True iff every term has even total degree, i.e. P(p) = P(-p).
bool is_even(const Polynomial& poly);

// p -> P(A p) for a square rational matrix A of matching size.
Polynomial substitute_linear(const Polynomial& poly, const RationalMatrix& matrix);

// Default names p0, p1, ..., p{d-1}.
std::vector<std::string> default_variable_names(int dimension);

// Canonical text: terms in descending graded-lex order, rational coefficients,
// `*` between factors and `^` for powers. Parses back to the same polynomial.
std::string render(const Polynomial& poly);
std::string render(const Polynomial& poly, std::span<const std::string> names);

// P == r0 + p0 * r1 modulo (p0^2 - p1^2 - ... - p{d-1}^2 - m2); r0, r1 are free of p0.
struct ShellReduction {
    Polynomial r0;
    Polynomial r1;
};

ShellReduction reduce_mod_shell(const Polynomial& poly, const Rational& mass2);

struct ShellConstancy {
    bool constant = false;
    Rational value;        // meaningful when constant
    Polynomial witness;    // nonzero obstruction when not constant
};

ShellConstancy is_constant_on_shell(const Polynomial& poly, const Rational& mass2);

}  // namespace gffmod
