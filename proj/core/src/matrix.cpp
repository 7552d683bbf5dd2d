#include "gffmod/matrix.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gffmod {

RationalMatrix::RationalMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size) {
    if (size <= 0) throw DimensionError("matrix size must be positive");
}

RationalMatrix RationalMatrix::identity(int size) {
    RationalMatrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (rhs.size_ != size_) throw DimensionError("matrix size mismatch");
    RationalMatrix out(size_);
    for (int i = 0; i < size_; ++i)
        for (int k = 0; k < size_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < size_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> vec) const {
    if (static_cast<int>(vec.size()) != size_) throw DimensionError("vector length mismatch");
    RationalVector out(size_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out[i] += (*this)(i, j) * vec[j];
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(size_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Rational RationalMatrix::determinant() const {
    // Fraction-exact Gaussian elimination.
    RationalMatrix work = *this;
    Rational det(1);
    for (int col = 0; col < size_; ++col) {
        int pivot = col;
        while (pivot < size_ && work(pivot, col) == 0) ++pivot;
        if (pivot == size_) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < size_; ++j) std::swap(work(pivot, j), work(col, j));
            det = -det;
        }
        det *= work(col, col);
        for (int row = col + 1; row < size_; ++row) {
            if (work(row, col) == 0) continue;
            Rational factor = work(row, col) / work(col, col);
            for (int j = col; j < size_; ++j) work(row, j) -= factor * work(col, j);
        }
    }
    return det;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return size_ == rhs.size_ && entries_ == rhs.entries_;
}

bool RationalMatrix::operator<(const RationalMatrix& rhs) const {
    if (size_ != rhs.size_) return size_ < rhs.size_;
    return std::lexicographical_compare(entries_.begin(), entries_.end(), rhs.entries_.begin(), rhs.entries_.end());
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < size_; ++i) {
        out << (i ? "," : "") << '[';
        for (int j = 0; j < size_; ++j) out << (j ? "," : "") << '"' << gffmod::to_string((*this)(i, j)) << '"';
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace gffmod
