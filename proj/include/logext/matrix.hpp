#ifndef LOGEXT_MATRIX_HPP
#define LOGEXT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "logext/rational.hpp"

namespace logext {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix from_rows(
        const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    RationalMatrix leading_block(std::size_t k) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

int rank_of(const RationalMatrix& m);

// Exact determinant via pivoted elimination. Throws DimensionError if
// non-square.
Rational det(const RationalMatrix& m);

// Unique exact solution of m x = rhs; the residual is re-verified to be
// identically zero before returning. Throws SingularMatrixError (with the
// rank) if m is singular, DimensionError on shape mismatch.
std::vector<Rational> solve(const RationalMatrix& m,
                            const std::vector<Rational>& rhs);

// det of the k x k top-left blocks, k = 1..n. Requires square symmetric
// input (SymmetryError otherwise).
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

}  // namespace logext

#endif
