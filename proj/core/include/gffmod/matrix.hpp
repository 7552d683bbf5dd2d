#pragma once

#include "gffmod/rational.hpp"

#include <span>
#include <string>

namespace gffmod {

// Square matrix with exact rational entries, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(int size);

    static RationalMatrix identity(int size);

    int size() const noexcept { return size_; }

    const Rational& operator()(int row, int col) const { return entries_[index(row, col)]; }
    Rational& operator()(int row, int col) { return entries_[index(row, col)]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalVector operator*(std::span<const Rational> vec) const;
    RationalMatrix transpose() const;
    Rational determinant() const;

    bool operator==(const RationalMatrix& rhs) const;
    // Lexicographic order over entries; used for deduplication.
    bool operator<(const RationalMatrix& rhs) const;

    // Rows as arrays of rational strings, e.g. [["1","0"],["0","1"]].
    std::string to_string() const;

private:
    int index(int row, int col) const { return row * size_ + col; }

    int size_;
    RationalVector entries_;
};

}  // namespace gffmod
