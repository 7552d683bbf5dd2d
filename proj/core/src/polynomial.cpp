#include "gffmod/polynomial.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gffmod {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Power table base^0 .. base^max_power.
template <typename T>
std::vector<T> powers(const T& base, unsigned max_power, const T& one) {
    std::vector<T> out;
    out.reserve(max_power + 1);
    out.push_back(one);
    for (unsigned k = 1; k <= max_power; ++k) out.push_back(out.back() * base);
    return out;
}

template <typename T>
T evaluate_impl(const Polynomial& poly, std::span<const T> point) {
    const int d = poly.dimension();
    if (static_cast<int>(point.size()) != d)
        throw DimensionError("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                             std::to_string(d));
    std::vector<std::vector<T>> tables(d);
    for (int v = 0; v < d; ++v) {
        const int deg = poly.degree_in(v);
        tables[v] = powers<T>(point[v], deg < 0 ? 0u : static_cast<unsigned>(deg), T(1));
    }
    T sum(0);
    for (const auto& [exp, coeff] : poly.terms()) {
        T term = static_cast<T>(coeff.get_d());
        for (int v = 0; v < d; ++v)
            if (exp[v]) term *= tables[v][exp[v]];
        sum += term;
    }
    return sum;
}

}  // namespace

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw DimensionError("polynomial dimension must be at least 1");
}

Polynomial Polynomial::constant(int dimension, const Rational& value) {
    Polynomial p(dimension);
    p.add_term(Exponent(dimension, 0), value);
    return p;
}

Polynomial Polynomial::variable(int dimension, int index) {
    if (index < 0 || index >= dimension) throw DimensionError("variable index out of range");
    Exponent e(dimension, 0);
    e[index] = 1;
    Polynomial p(dimension);
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Exponent& exponent, const Rational& coefficient) {
    Polynomial p(static_cast<int>(exponent.size()));
    p.add_term(exponent, coefficient);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Exponent(dimension_, 0)); }

Rational Polynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_.rbegin()->first));
}

int Polynomial::degree_in(int variable) const {
    int deg = -1;
    for (const auto& [exp, coeff] : terms_) deg = std::max(deg, static_cast<int>(exp[variable]));
    return deg;
}

void Polynomial::add_term(const Exponent& exponent, const Rational& coefficient) {
    if (static_cast<int>(exponent.size()) != dimension_) throw DimensionError("exponent length mismatch");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_dimension(const Polynomial& rhs) const {
    if (rhs.dimension_ != dimension_)
        throw DimensionError("polynomial dimensions differ: " + std::to_string(dimension_) + " vs " +
                             std::to_string(rhs.dimension_));
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [exp, coeff] : out.terms_) coeff = -coeff;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_dimension(rhs);
    Polynomial out = *this;
    for (const auto& [exp, coeff] : rhs.terms_) out.add_term(exp, coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_dimension(rhs);
    Polynomial out(dimension_);
    Exponent e(dimension_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int v = 0; v < dimension_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return Polynomial(dimension_);
    Polynomial out = *this;
    for (auto& [exp, coeff] : out.terms_) coeff *= scalar;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(dimension_, Rational(1));
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

std::complex<double> evaluate(const Polynomial& poly, std::span<const std::complex<double>> point) {
    return evaluate_impl<std::complex<double>>(poly, point);
}

double evaluate(const Polynomial& poly, std::span<const double> point) { return evaluate_impl<double>(poly, point); }

Rational evaluate(const Polynomial& poly, std::span<const Rational> point) {
    const int d = poly.dimension();
    if (static_cast<int>(point.size()) != d) throw DimensionError("evaluation point length mismatch");
    std::vector<RationalVector> tables(d);
    for (int v = 0; v < d; ++v) {
        const int deg = poly.degree_in(v);
        tables[v] = powers<Rational>(point[v], deg < 0 ? 0u : static_cast<unsigned>(deg), Rational(1));
    }
    Rational sum(0);
    for (const auto& [exp, coeff] : poly.terms()) {
        Rational term = coeff;
        for (int v = 0; v < d; ++v)
            if (exp[v]) term *= tables[v][exp[v]];
        sum += term;
    }
    return sum;
}

bool is_even(const Polynomial& poly) {
    return std::all_of(poly.terms().begin(), poly.terms().end(),
                       [](const auto& term) { return degree_of(term.first) % 2 == 0; });
}

Polynomial substitute_linear(const Polynomial& poly, const RationalMatrix& matrix) {
    const int d = poly.dimension();
    if (matrix.size() != d) throw DimensionError("substitution matrix does not match polynomial dimension");

    // Row i of the matrix is the linear form replacing variable i.
    std::vector<std::vector<Polynomial>> form_powers(d);
    for (int i = 0; i < d; ++i) {
        Polynomial form(d);
        for (int j = 0; j < d; ++j) {
            Exponent e(d, 0);
            e[j] = 1;
            form.add_term(e, matrix(i, j));
        }
        const int deg = std::max(poly.degree_in(i), 0);
        form_powers[i] = powers<Polynomial>(form, static_cast<unsigned>(deg), Polynomial::constant(d, Rational(1)));
    }

    Polynomial out(d);
    for (const auto& [exp, coeff] : poly.terms()) {
        Polynomial term = Polynomial::constant(d, coeff);
        for (int v = 0; v < d; ++v)
            if (exp[v]) term = term * form_powers[v][exp[v]];
        out = out + term;
    }
    return out;
}

std::vector<std::string> default_variable_names(int dimension) {
    std::vector<std::string> names;
    for (int v = 0; v < dimension; ++v) names.push_back("p" + std::to_string(v));
    return names;
}

std::string render(const Polynomial& poly) {
    const auto names = default_variable_names(poly.dimension());
    return render(poly, names);
}

std::string render(const Polynomial& poly, std::span<const std::string> names) {
    if (static_cast<int>(names.size()) != poly.dimension()) throw DimensionError("variable name count mismatch");
    if (poly.is_zero()) return "0";

    std::ostringstream out;
    bool first = true;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        const auto& [exp, coeff] = *it;
        const bool negative = coeff < 0;
        const Rational magnitude = abs(coeff);

        if (first) out << (negative ? "-" : "");
        else out << (negative ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        for (int v = 0; v < poly.dimension(); ++v) {
            if (!exp[v]) continue;
            factors.push_back(exp[v] == 1 ? names[v] : names[v] + "^" + std::to_string(exp[v]));
        }
        if (factors.empty() || magnitude != 1) factors.insert(factors.begin(), to_string(magnitude));
        for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
    }
    return out.str();
}

ShellReduction reduce_mod_shell(const Polynomial& poly, const Rational& mass2) {
    const int d = poly.dimension();
    // p0^2 -> p1^2 + ... + p{d-1}^2 + m2
    Polynomial shell_square = Polynomial::constant(d, mass2);
    for (int v = 1; v < d; ++v) {
        Exponent e(d, 0);
        e[v] = 2;
        shell_square.add_term(e, Rational(1));
    }
    const int deg0 = std::max(poly.degree_in(0), 0);
    const auto square_powers =
        powers<Polynomial>(shell_square, static_cast<unsigned>(deg0 / 2), Polynomial::constant(d, Rational(1)));

    ShellReduction out{Polynomial(d), Polynomial(d)};
    for (const auto& [exp, coeff] : poly.terms()) {
        Exponent rest = exp;
        rest[0] = 0;
        Polynomial reduced = Polynomial::monomial(rest, coeff) * square_powers[exp[0] / 2];
        if (exp[0] % 2 == 0) out.r0 = out.r0 + reduced;
        else out.r1 = out.r1 + reduced;
    }
    return out;
}

ShellConstancy is_constant_on_shell(const Polynomial& poly, const Rational& mass2) {
    const auto [r0, r1] = reduce_mod_shell(poly, mass2);
    ShellConstancy verdict{false, Rational(0), Polynomial(poly.dimension())};
    const Polynomial varying = r0 - Polynomial::constant(poly.dimension(), r0.constant_term());
    if (r1.is_zero() && varying.is_zero()) {
        verdict.constant = true;
        verdict.value = r0.constant_term();
        return verdict;
    }
    verdict.witness = varying.is_zero() ? r1 : varying;
    return verdict;
}

}  // namespace gffmod
