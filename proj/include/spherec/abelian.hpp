#ifndef SPHEREC_ABELIAN_HPP
#define SPHEREC_ABELIAN_HPP

#include "spherec/numeric.hpp"
#include "spherec/presentation.hpp"

#include <cstddef>
#include <vector>

namespace spherec {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntegerMatrix multiply(const IntegerMatrix& other) const;

    /// Exact determinant (square matrices) via fraction-free elimination.
    Int determinant() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Diagonalization left * A * right = diag(diagonal) with unimodular
/// transforms and the divisibility chain d1 | d2 | ... . The diagonal holds
/// the nonzero invariant factors only; rank = diagonal.size().
struct SmithForm {
    std::vector<Int> diagonal;
    std::size_t rank = 0;
    IntegerMatrix left;
    IntegerMatrix right;
};

/// Deterministic Smith normal form. Pivot choice: nonzero entry of minimal
/// absolute value in the remaining block, ties broken by lowest row then
/// lowest column.
SmithForm smithNormalForm(const IntegerMatrix& a);

struct AbelianizationResult {
    std::size_t freeRank = 0;
    std::vector<Int> torsion; // coefficients > 1, in divisibility order
    bool isTrivial = false;
};

/// n x m matrix whose (i,j) entry is the exponent sum of generator i in
/// relator j.
IntegerMatrix relationMatrix(const GroupPresentation& p);

/// Structure of Z^n / (column space of the relation matrix).
AbelianizationResult abelianization(const GroupPresentation& p);

} // namespace spherec

#endif
