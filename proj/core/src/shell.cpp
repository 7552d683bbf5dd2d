#include "gffmod/shell.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gffmod {

Polynomial ShellForm::leading_coefficient() const {
    Polynomial out(Q.dimension());
    const int top = pplus_degree();
    for (const auto& [exp, coeff] : Q.terms()) {
        if (static_cast<int>(exp[0]) != top) continue;
        Exponent e = exp;
        e[0] = 0;
        out.add_term(e, coeff);
    }
    return out;
}

bool ShellForm::is_pplus_monomial() const {
    if (Q.is_zero()) return true;
    const unsigned first = Q.terms().begin()->first[0];
    return std::all_of(Q.terms().begin(), Q.terms().end(), [first](const auto& t) { return t.first[0] == first; });
}

std::vector<std::string> shell_variable_names(int dimension) {
    std::vector<std::string> names{"pplus"};
    for (int v = 2; v < dimension; ++v) names.push_back("p" + std::to_string(v));
    return names;
}

ShellForm to_shell_form(const Polynomial& weight, const Rational& mass2) {
    const int d = weight.dimension();
    if (d < 2) throw DimensionError("space-time dimension must be at least 2");
    if (mass2 < 0) throw ModelError("negative mass squared");
    if (!is_even(weight)) throw ModelError("weight polynomial is not even: " + render(weight));

    // Variables (p+, p-, phat): p0 = (p+ + p-)/2, p1 = (p+ - p-)/2.
    RationalMatrix chart = RationalMatrix::identity(d);
    chart(0, 0) = Rational(1, 2);
    chart(0, 1) = Rational(1, 2);
    chart(1, 0) = Rational(1, 2);
    chart(1, 1) = Rational(-1, 2);
    const Polynomial lightcone = substitute_linear(weight, chart);

    // Q's layout: variable 0 = p+, variables 1.. = phat.
    const int qdim = d - 1;
    Polynomial transverse = Polynomial::constant(qdim, mass2);  // phat^2 + m2
    for (int v = 1; v < qdim; ++v) {
        Exponent e(qdim, 0);
        e[v] = 2;
        transverse.add_term(e, Rational(1));
    }

    // p- = (phat^2 + m2)/p+ turns each term into a Laurent monomial in p+.
    std::map<int, Polynomial> laurent;
    std::map<unsigned, Polynomial> transverse_powers;
    for (const auto& [exp, coeff] : lightcone.terms()) {
        const unsigned minus_power = exp[1];
        auto it = transverse_powers.find(minus_power);
        if (it == transverse_powers.end()) it = transverse_powers.emplace(minus_power, transverse.pow(minus_power)).first;
        Exponent rest(qdim, 0);
        for (int v = 2; v < d; ++v) rest[v - 1] = exp[v];
        const int shift = static_cast<int>(exp[0]) - static_cast<int>(minus_power);
        auto [slot, inserted] = laurent.try_emplace(shift, Polynomial(qdim));
        slot->second = slot->second + Polynomial::monomial(rest, coeff) * it->second;
    }
    std::erase_if(laurent, [](const auto& entry) { return entry.second.is_zero(); });

    ShellForm form;
    form.dimension = d;
    form.mass2 = mass2;
    form.Q = Polynomial(qdim);
    if (laurent.empty()) return form;

    const int lowest = laurent.begin()->first;
    form.n = lowest < 0 ? (-lowest + 1) / 2 : 0;
    for (const auto& [shift, coeff_poly] : laurent) {
        Exponent e(qdim, 0);
        e[0] = static_cast<unsigned>(shift + 2 * form.n);
        form.Q = form.Q + coeff_poly * Polynomial::monomial(e, Rational(1));
    }
    return form;
}

UnivariateInstance instantiate(const ShellForm& form, std::span<const Rational> phat) {
    const int qdim = form.Q.dimension();
    if (static_cast<int>(phat.size()) != qdim - 1) throw DimensionError("phat has the wrong length");
    const int degree = form.pplus_degree();
    UnivariateInstance out;
    if (degree < 0) return out;
    out.coefficients.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (const auto& [exp, coeff] : form.Q.terms()) {
        Rational value = coeff;
        for (int v = 1; v < qdim; ++v)
            if (exp[v]) value *= rational_pow(phat[v - 1], exp[v]);
        out.coefficients[exp[0]] += value;
    }
    out.degenerate = out.coefficients.back() == 0;
    return out;
}

std::vector<double> instantiate(const ShellForm& form, std::span<const double> phat) {
    const int qdim = form.Q.dimension();
    if (static_cast<int>(phat.size()) != qdim - 1) throw DimensionError("phat has the wrong length");
    const int degree = form.pplus_degree();
    if (degree < 0) return {};
    std::vector<double> out(static_cast<std::size_t>(degree) + 1, 0.0);
    for (const auto& [exp, coeff] : form.Q.terms()) {
        double value = coeff.get_d();
        for (int v = 1; v < qdim; ++v)
            if (exp[v]) value *= std::pow(phat[v - 1], static_cast<int>(exp[v]));
        out[exp[0]] += value;
    }
    return out;
}

double shell_value(const ShellForm& form, double pplus, std::span<const double> phat) {
    const auto coeffs = instantiate(form, phat);
    double q = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) q = q * pplus + *it;
    return q * std::pow(pplus, -2 * form.n);
}

RationalVector shell_point(const Rational& pplus, std::span<const Rational> phat, const Rational& mass2) {
    if (pplus == 0) throw DimensionError("p+ must be nonzero on the shell chart");
    Rational transverse = mass2;
    for (const auto& x : phat) transverse += x * x;
    const Rational pminus = transverse / pplus;
    RationalVector point{(pplus + pminus) / 2, (pplus - pminus) / 2};
    point.insert(point.end(), phat.begin(), phat.end());
    return point;
}

}  // namespace gffmod
