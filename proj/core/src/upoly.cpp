#include "gffmod/upoly.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <sstream>

namespace gffmod {

RationalUPoly::RationalUPoly(RationalVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void RationalUPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalUPoly RationalUPoly::derivative() const {
    if (degree() < 1) return {};
    RationalVector out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return RationalUPoly(std::move(out));
}

RationalUPoly RationalUPoly::monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

RationalUPoly RationalUPoly::operator+(const RationalUPoly& rhs) const {
    RationalVector out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) out[k] += rhs.coeffs_[k];
    return RationalUPoly(std::move(out));
}

RationalUPoly RationalUPoly::operator-(const RationalUPoly& rhs) const { return *this + rhs * Rational(-1); }

RationalUPoly RationalUPoly::operator*(const RationalUPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    RationalVector out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RationalUPoly(std::move(out));
}

RationalUPoly RationalUPoly::operator*(const Rational& scalar) const {
    RationalVector out = coeffs_;
    for (auto& c : out) c *= scalar;
    return RationalUPoly(std::move(out));
}

Rational RationalUPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int RationalUPoly::sign_at_infinity(int direction) const {
    if (is_zero()) return 0;
    const int s = sgn(leading());
    return (direction < 0 && degree() % 2 == 1) ? -s : s;
}

std::string RationalUPoly::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out << (k ? ", " : "") << gffmod::to_string(coeffs_[k]);
    out << ']';
    return out.str();
}

std::pair<RationalUPoly, RationalUPoly> divmod(const RationalUPoly& a, const RationalUPoly& b) {
    if (b.is_zero()) throw NumericalError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalUPoly{}, a};
    RationalVector rem = a.coefficients();
    RationalVector quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational& lead = b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        const Rational factor = rem[k] / lead;
        quot[k - db] = factor;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coefficients()[j];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RationalUPoly(std::move(quot)), RationalUPoly(std::move(rem))};
}

RationalUPoly gcd(const RationalUPoly& a, const RationalUPoly& b) {
    RationalUPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalUPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RationalUPoly squarefree_part(const RationalUPoly& f) {
    if (f.degree() < 1) return f.monic();
    return divmod(f, gcd(f, f.derivative())).first.monic();
}

std::vector<std::pair<RationalUPoly, int>> squarefree_decomposition(const RationalUPoly& f) {
    std::vector<std::pair<RationalUPoly, int>> out;
    if (f.degree() < 1) return out;
    const RationalUPoly fp = f.derivative();
    const RationalUPoly a0 = gcd(f, fp);
    RationalUPoly b = divmod(f, a0).first;
    RationalUPoly c = divmod(fp, a0).first;
    RationalUPoly d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        const RationalUPoly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, k);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
    }
    return out;
}

}  // namespace gffmod
