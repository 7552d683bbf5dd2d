#include "gffmod/lorentz.hpp"

#include "gffmod/error.hpp"

#include <map>

namespace gffmod {

namespace {

RationalMatrix metric(int d) {
    RationalMatrix eta(d);
    eta(0, 0) = 1;
    for (int i = 1; i < d; ++i) eta(i, i) = -1;
    return eta;
}

void require_spatial_axis(int d, int axis) {
    if (axis < 1 || axis >= d)
        throw DimensionError("spatial axis " + std::to_string(axis) + " out of range for dimension " +
                             std::to_string(d));
}

}  // namespace

bool is_proper_orthochronous(const RationalMatrix& m) {
    const RationalMatrix eta = metric(m.size());
    return m.transpose() * eta * m == eta && m.determinant() == 1 && m(0, 0) >= 1;
}

LorentzTransform LorentzTransform::identity(int dimension) {
    return LorentzTransform(RationalMatrix::identity(dimension));
}

LorentzTransform LorentzTransform::from_matrix(const RationalMatrix& matrix) {
    if (!is_proper_orthochronous(matrix))
        throw ModelError("matrix is not a proper orthochronous Lorentz transformation: " + matrix.to_string());
    return LorentzTransform(matrix);
}

LorentzTransform LorentzTransform::inverse() const {
    const RationalMatrix eta = metric(dimension());
    return LorentzTransform(eta * matrix_.transpose() * eta);
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const {
    return LorentzTransform(matrix_ * rhs.matrix_);
}

LorentzTransform rotation(int dimension, int i, int j, const Rational& t) {
    require_spatial_axis(dimension, i);
    require_spatial_axis(dimension, j);
    if (i >= j) throw DimensionError("rotation plane needs i < j");
    const Rational denom = 1 + t * t;
    const Rational c = (1 - t * t) / denom;
    const Rational s = 2 * t / denom;
    RationalMatrix m = RationalMatrix::identity(dimension);
    m(i, i) = c;
    m(i, j) = -s;
    m(j, i) = s;
    m(j, j) = c;
    return LorentzTransform::from_matrix(m);
}

LorentzTransform boost(int dimension, int i, const Rational& t) {
    require_spatial_axis(dimension, i);
    if (abs(t) >= 1) throw DimensionError("boost parameter must satisfy |t| < 1");
    const Rational denom = 1 - t * t;
    const Rational ch = (1 + t * t) / denom;
    const Rational sh = 2 * t / denom;
    RationalMatrix m = RationalMatrix::identity(dimension);
    m(0, 0) = ch;
    m(0, i) = sh;
    m(i, 0) = sh;
    m(i, i) = ch;
    return LorentzTransform::from_matrix(m);
}

Polynomial apply_linear(const Polynomial& poly, const LorentzTransform& transform) {
    if (poly.dimension() != transform.dimension()) throw DimensionError("transform dimension mismatch");
    return substitute_linear(poly, transform.inverse().matrix());
}

std::vector<OrbitElement> orbit(int dimension, int depth) {
    if (depth < 0) throw DimensionError("orbit depth must be nonnegative");

    std::vector<OrbitElement> generators;
    const Rational rotation_params[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)};
    const Rational boost_params[] = {Rational(1, 3), Rational(-1, 3), Rational(1, 2), Rational(-1, 2)};
    for (int i = 1; i < dimension; ++i)
        for (int j = i + 1; j < dimension; ++j)
            for (const auto& t : rotation_params)
                generators.push_back({rotation(dimension, i, j, t),
                                      "R" + std::to_string(i) + std::to_string(j) + "(" + to_string(t) + ")"});
    for (int i = 1; i < dimension; ++i)
        for (const auto& t : boost_params)
            generators.push_back({boost(dimension, i, t), "B" + std::to_string(i) + "(" + to_string(t) + ")"});

    std::vector<OrbitElement> out{{LorentzTransform::identity(dimension), "id"}};
    std::map<RationalMatrix, std::size_t> seen{{out.front().transform.matrix(), 0}};
    std::size_t level_begin = 0;
    for (int level = 1; level <= depth; ++level) {
        const std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (const auto& gen : generators) {
                LorentzTransform product = out[k].transform * gen.transform;
                if (seen.count(product.matrix())) continue;
                seen.emplace(product.matrix(), out.size());
                const std::string word = out[k].word == "id" ? gen.word : out[k].word + "*" + gen.word;
                out.push_back({std::move(product), word});
            }
        level_begin = level_end;
    }
    return out;
}

Wedge Wedge::right(int dimension) {
    return {LorentzTransform::identity(dimension), RationalVector(dimension)};
}

Wedge Wedge::left(int dimension) {
    if (dimension < 3) throw DimensionError("the left wedge is not a proper orthochronous image of W_R for d < 3");
    const auto quarter = rotation(dimension, 1, 2, Rational(1));
    return {quarter * quarter, RationalVector(dimension)};
}

bool Wedge::contains(std::span<const Rational> point) const {
    const int d = frame.dimension();
    if (static_cast<int>(point.size()) != d) throw DimensionError("point dimension mismatch");
    RationalVector shifted(point.begin(), point.end());
    for (int i = 0; i < d; ++i) shifted[i] -= offset[i];
    const RationalVector local = frame.inverse().matrix() * std::span<const Rational>(shifted);
    return abs(local[0]) < local[1];
}

}  // namespace gffmod
