#pragma once

#include "gffmod/matrix.hpp"
#include "gffmod/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace gffmod {

// Proper orthochronous Lorentz transformation with rational entries,
// metric signature (+, -, ..., -).
//
// Every instance satisfies L^T eta L = eta, det L = +1 and L(0,0) >= 1
// exactly; the factory functions reject anything else.
class LorentzTransform {
public:
    static LorentzTransform identity(int dimension);
    // Throws ModelError if the matrix is not proper orthochronous Lorentz.
    static LorentzTransform from_matrix(const RationalMatrix& matrix);

    int dimension() const noexcept { return matrix_.size(); }
    const RationalMatrix& matrix() const noexcept { return matrix_; }

    // eta L^T eta, exact.
    LorentzTransform inverse() const;
    LorentzTransform operator*(const LorentzTransform& rhs) const;

    bool operator==(const LorentzTransform& rhs) const { return matrix_ == rhs.matrix_; }

private:
    explicit LorentzTransform(RationalMatrix matrix) : matrix_(std::move(matrix)) {}

    RationalMatrix matrix_;
};

// Checks the metric identity, determinant and time orientation exactly.
bool is_proper_orthochronous(const RationalMatrix& matrix);

// Rotation in the spatial (i, j) plane with cos = (1-t^2)/(1+t^2) and
// sin = 2t/(1+t^2); t = 1 is the quarter turn.
LorentzTransform rotation(int dimension, int i, int j, const Rational& t);

// Boost along spatial axis i with cosh = (1+t^2)/(1-t^2), sinh = 2t/(1-t^2), |t| < 1.
LorentzTransform boost(int dimension, int i, const Rational& t);

// p -> P(L^{-1} p): the weight polynomial seen from the frame L.
Polynomial apply_linear(const Polynomial& poly, const LorentzTransform& transform);

struct OrbitElement {
    LorentzTransform transform;
    std::string word;  // generator product, e.g. "B2(1/3)*R12(1)"; "id" for the identity
};

// All products of at most `depth` generators, deduplicated by matrix and
// listed in breadth-first order starting with the identity. Generators are
// R_ij(+-1), R_ij(+-1/2) for every spatial plane and B_i(+-1/3), B_i(+-1/2)
// for every spatial axis.
std::vector<OrbitElement> orbit(int dimension, int depth);

// Lambda * W_R + offset, where W_R = {|x0| < x1}.
struct Wedge {
    LorentzTransform frame;
    RationalVector offset;

    static Wedge right(int dimension);
    // Rotation of W_R by pi in the (1,2) plane; needs dimension >= 3.
    static Wedge left(int dimension);

    bool contains(std::span<const Rational> point) const;
};

}  // namespace gffmod
