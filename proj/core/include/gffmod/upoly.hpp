#pragma once

#include "gffmod/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gffmod {

// Dense univariate polynomial over Q, coefficients in ascending order with
// no trailing zeros. The zero polynomial has degree -1.
class RationalUPoly {
public:
    RationalUPoly() = default;
    explicit RationalUPoly(RationalVector coefficients);

    static RationalUPoly constant(const Rational& c) { return RationalUPoly(RationalVector{c}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const RationalVector& coefficients() const noexcept { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    RationalUPoly derivative() const;
    RationalUPoly monic() const;

    RationalUPoly operator+(const RationalUPoly& rhs) const;
    RationalUPoly operator-(const RationalUPoly& rhs) const;
    RationalUPoly operator*(const RationalUPoly& rhs) const;
    RationalUPoly operator*(const Rational& scalar) const;
    bool operator==(const RationalUPoly& rhs) const = default;

    Rational operator()(const Rational& x) const;
    // Sign of p(x) as x -> +inf (direction > 0) or -inf (direction < 0).
    int sign_at_infinity(int direction) const;

    std::string to_string() const;

private:
    void trim();

    RationalVector coeffs_;
};

// Quotient and remainder; throws on division by zero.
std::pair<RationalUPoly, RationalUPoly> divmod(const RationalUPoly& a, const RationalUPoly& b);

// Monic gcd; gcd(0, 0) = 0.
RationalUPoly gcd(const RationalUPoly& a, const RationalUPoly& b);

// f / gcd(f, f'), monic.
RationalUPoly squarefree_part(const RationalUPoly& f);

// Yun's algorithm: f = lc * prod_k factor_k^k with squarefree, pairwise coprime
// monic factors. Entries with constant factors are omitted.
std::vector<std::pair<RationalUPoly, int>> squarefree_decomposition(const RationalUPoly& f);

}  // namespace gffmod
