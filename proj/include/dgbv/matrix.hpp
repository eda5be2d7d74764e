#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgbv/scalar.hpp"

namespace dgbv {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t k);
Vec conj(const Vec& v);

/// Dense matrix over the Gaussian rationals.  Dimensions in this engine stay
/// small (<= ~64), so dense exact elimination is the whole linear algebra story.
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Vec column(size_t c) const;
    Vec row(size_t r) const;
    std::vector<Vec> columns() const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix conj_transpose() const;
    Matrix conjugate() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec apply(const Vec& v) const;

    /// Horizontal / vertical concatenation.
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;
    Scalar det() const;  // square only
    Matrix inverse() const;  // square, invertible

    /// Basis of the null space, returned as columns (may have zero columns).
    Matrix kernel() const;
    /// Basis of the column space: the pivot columns of the original matrix.
    Matrix image() const;

    /// One solution of Ax = b, or nullopt when inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// A subspace of k^n held in a canonical form: the RREF row basis of the
/// span of its generators.  Equality of subspaces is equality of the forms.
class Subspace {
  public:
    Subspace() = default;
    /// Span of the columns of m (m is n x k).
    explicit Subspace(const Matrix& generators);
    static Subspace zero(size_t ambient_dim);

    size_t dim() const;
    size_t ambient() const { return ambient_; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Canonical spanning vectors (RREF rows turned back into vectors).
    std::vector<Vec> basis() const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    size_t ambient_ = 0;
    Matrix rref_rows_;  // dim x ambient, canonical
};

}  // namespace dgbv
