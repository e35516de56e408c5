#include "logext/matrix.hpp"

#include "logext/errors.hpp"

namespace logext {

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::leading_block(std::size_t k) const {
    RationalMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) b.at(i, j) = at(i, j);
    return b;
}

int rank_of(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::size_t nr = a.rows(), nc = a.cols();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pivot = row;
        while (pivot < nr && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == nr) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < nc; ++j)
                std::swap(a.at(pivot, j), a.at(row, j));
        const Rational p = a.at(row, col);
        for (std::size_t i = row + 1; i < nr; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) / p;
            for (std::size_t j = col; j < nc; ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rational det(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionError("det: matrix is not square");
    std::size_t n = m.rows();
    RationalMatrix a = m;
    Rational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a.at(pivot, j), a.at(col, j));
            result = -result;
        }
        const Rational p = a.at(col, col);
        result *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) / p;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) -= f * a.at(col, j);
        }
    }
    return result;
}

std::vector<Rational> solve(const RationalMatrix& m,
                            const std::vector<Rational>& rhs) {
    if (!m.is_square()) throw DimensionError("solve: matrix is not square");
    std::size_t n = m.rows();
    if (rhs.size() != n) throw DimensionError("solve: rhs size mismatch");

    RationalMatrix a = m;
    std::vector<Rational> b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n)
            throw SingularMatrixError("solve: singular matrix", rank_of(m));
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        const Rational p = a.at(col, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) / p;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);

    // exact residual check
    for (std::size_t i = 0; i < n; ++i) {
        Rational r(0);
        for (std::size_t j = 0; j < n; ++j) r += m.at(i, j) * x[j];
        if (r != rhs[i]) throw Error("solve: residual is nonzero");
    }
    return x;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    if (!m.is_square())
        throw DimensionError("leading_principal_minors: not square");
    if (!m.is_symmetric())
        throw SymmetryError("leading_principal_minors: not symmetric");
    std::vector<Rational> minors;
    minors.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k)
        minors.push_back(det(m.leading_block(k)));
    return minors;
}

}  // namespace logext
