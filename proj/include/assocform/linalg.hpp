#pragma once

// Exact dense linear algebra over a field Scalar (in practice Rational).
//
// Everything here is written for exact arithmetic: a pivot is the first
// nonzero entry, never the largest one, and equality tests are exact. The
// reduced row echelon form is canonical, so two spanning sets of the same
// subspace yield identical bases and subspace equality is a row comparison.

#include "assocform/errors.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace assocform {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Nonzero rows of the reduced row echelon form together with pivot columns.
template <class Scalar>
struct Echelon {
    Matrix<Scalar> basis;
    std::vector<Index> pivots;

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

template <class Scalar>
bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}

// In-place Gauss-Jordan elimination; returns pivot columns. Rows past the
// rank are left zero.
template <class Scalar>
std::vector<Index> gauss_jordan(Matrix<Scalar>& m) {
    std::vector<Index> pivots;
    const Index rows = m.rows();
    const Index cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));

        const Scalar inv = Scalar(1) / m(r, c);
        for (Index k = c; k < cols; ++k)
            if (!is_zero(m(r, k))) m(r, k) *= inv;

        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Scalar f = m(i, c);
            for (Index k = c; k < cols; ++k)
                if (!is_zero(m(r, k))) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

template <class Scalar>
Echelon<Scalar> rref(Matrix<Scalar> m) {
    auto pivots = detail::gauss_jordan(m);
    Matrix<Scalar> basis = m.topRows(static_cast<Index>(pivots.size()));
    return {std::move(basis), std::move(pivots)};
}

template <class Scalar>
Index rank(const Matrix<Scalar>& m) {
    return rref(m).rank();
}

/// Exact determinant by fraction-reduced elimination.
template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const Index n = m.rows();
    Scalar det(1);
    for (Index c = 0; c < n; ++c) {
        Index p = c;
        while (p < n && detail::is_zero(m(p, c))) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        for (Index i = c + 1; i < n; ++i) {
            if (detail::is_zero(m(i, c))) continue;
            const Scalar f = m(i, c) / m(c, c);
            for (Index k = c; k < n; ++k)
                if (!detail::is_zero(m(c, k))) m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const Index n = m.rows();
    Matrix<Scalar> aug(n, 2 * n);
    aug << m, Matrix<Scalar>::Identity(n, n);
    const auto pivots = detail::gauss_jordan(aug);
    if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n))
        throw SingularMatrixError("matrix is not invertible");
    return aug.rightCols(n);
}

/// A linear subspace of Scalar^ambient_dim held in canonical rref form.
template <class Scalar>
class Subspace {
public:
    explicit Subspace(Index ambient_dim)
        : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the rows of `generators`.
    static Subspace span(Matrix<Scalar> generators) {
        Subspace s(generators.cols());
        auto e = rref(std::move(generators));
        s.basis_ = std::move(e.basis);
        s.pivots_ = std::move(e.pivots);
        return s;
    }

    static Subspace full(Index ambient_dim) {
        return span(Matrix<Scalar>::Identity(ambient_dim, ambient_dim));
    }

    Index ambient_dim() const { return ambient_dim_; }
    Index dim() const { return static_cast<Index>(pivots_.size()); }
    Index codim() const { return ambient_dim_ - dim(); }
    const Matrix<Scalar>& basis() const { return basis_; }
    const std::vector<Index>& pivots() const { return pivots_; }

    /// Columns that carry no pivot, in increasing order.
    std::vector<Index> free_columns() const {
        std::vector<Index> out;
        std::size_t p = 0;
        for (Index c = 0; c < ambient_dim_; ++c) {
            if (p < pivots_.size() && pivots_[p] == c)
                ++p;
            else
                out.push_back(c);
        }
        return out;
    }

    /// v minus its component along the basis; zero on every pivot column.
    /// Two vectors are congruent modulo the subspace iff residuals agree.
    Vector<Scalar> residual(Vector<Scalar> v) const {
        check_length(v);
        for (Index r = 0; r < dim(); ++r) {
            const Scalar f = v(pivots_[r]);
            if (detail::is_zero(f)) continue;
            for (Index k = pivots_[r]; k < ambient_dim_; ++k)
                if (!detail::is_zero(basis_(r, k))) v(k) -= f * basis_(r, k);
        }
        return v;
    }

    /// Coordinates of v in the rref basis, or nullopt when v lies outside.
    std::optional<Vector<Scalar>> coordinates(const Vector<Scalar>& v) const {
        check_length(v);
        Vector<Scalar> coords(dim());
        for (Index r = 0; r < dim(); ++r) coords(r) = v(pivots_[r]);
        const Vector<Scalar> rest = residual(v);
        for (Index k = 0; k < ambient_dim_; ++k)
            if (!detail::is_zero(rest(k))) return std::nullopt;
        return coords;
    }

    bool contains(const Vector<Scalar>& v) const { return coordinates(v).has_value(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ &&
               a.basis_ == b.basis_;
    }

private:
    void check_length(const Vector<Scalar>& v) const {
        if (v.size() != ambient_dim_)
            throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                    " in ambient dimension " +
                                    std::to_string(ambient_dim_));
    }

    Index ambient_dim_;
    Matrix<Scalar> basis_;
    std::vector<Index> pivots_;
};

template <class Scalar>
std::optional<Vector<Scalar>> membership(const Subspace<Scalar>& s,
                                         const Vector<Scalar>& v) {
    return s.coordinates(v);
}

/// Right null space {x : m x = 0}.
template <class Scalar>
Subspace<Scalar> kernel(const Matrix<Scalar>& m) {
    const auto e = rref(m);
    std::vector<Index> free;
    std::size_t p = 0;
    for (Index c = 0; c < m.cols(); ++c) {
        if (p < e.pivots.size() && e.pivots[p] == c)
            ++p;
        else
            free.push_back(c);
    }
    Matrix<Scalar> gens = Matrix<Scalar>::Zero(static_cast<Index>(free.size()), m.cols());
    for (Index i = 0; i < static_cast<Index>(free.size()); ++i) {
        gens(i, free[i]) = Scalar(1);
        for (Index r = 0; r < e.rank(); ++r) gens(i, e.pivots[r]) = -e.basis(r, free[i]);
    }
    return Subspace<Scalar>::span(std::move(gens));
}

template <class Scalar>
bool subspace_equal(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspaces live in different ambient spaces");
    return a == b;
}

} // namespace assocform
