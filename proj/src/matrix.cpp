#include "dgbv/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace dgbv {

Vec operator+(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t k) {
    Vec v(n);
    v[k] = Scalar::one();
    return v;
}

Vec conj(const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(cols[0].size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        assert(cols[c].size() == m.rows_);
        for (size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::column(size_t c) const {
    Vec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vec Matrix::row(size_t r) const {
    Vec v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

std::vector<Vec> Matrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::conj_transpose() const {
    Matrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conj();
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.at(r, k);
            if (x.is_zero()) continue;
            for (size_t c = 0; c < b.cols_; ++c) m.at(r, c) += x * b.at(k, c);
        }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = s * a.data_[i];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec Matrix::apply(const Vec& v) const {
    assert(v.size() == cols_);
    Vec out(rows_);
    for (size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (size_t r = 0; r < rows_; ++r) out[r] += at(r, c) * v[c];
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ == 0) return b;
    if (b.cols_ == 0) return a;
    assert(a.rows_ == b.rows_);
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (size_t r = 0; r < a.rows_; ++r) {
        for (size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
        for (size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    assert(a.cols_ == b.cols_);
    Matrix m(a.rows_ + b.rows_, a.cols_);
    for (size_t r = 0; r < a.rows_; ++r)
        for (size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (size_t r = 0; r < b.rows_; ++r)
        for (size_t c = 0; c < a.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
    return m;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t lead_row = 0;
    for (size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
        size_t piv = lead_row;
        while (piv < rows_ && at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != lead_row)
            for (size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(lead_row, c));
        Scalar inv = Scalar::one() / at(lead_row, col);
        for (size_t c = col; c < cols_; ++c) at(lead_row, c) *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == lead_row || at(r, col).is_zero()) continue;
            Scalar f = at(r, col);
            for (size_t c = col; c < cols_; ++c) at(r, c) -= f * at(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

Scalar Matrix::det() const {
    assert(rows_ == cols_);
    Matrix m = *this;
    Scalar d = Scalar::one();
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = col;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) return Scalar::zero();
        if (piv != col) {
            for (size_t c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(col, c));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = Scalar::one() / m.at(col, col);
        for (size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col) * inv;
            for (size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    assert(rows_ == cols_);
    Matrix aug = hstack(*this, identity(rows_));
    auto piv = aug.rref();
    if (piv.size() != rows_) throw std::runtime_error("matrix not invertible");
    Matrix inv(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

Matrix Matrix::kernel() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> cols;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_);
        v[free] = Scalar::one();
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(pr, free);
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return Matrix(cols_, 0);
    return from_columns(cols);
}

Matrix Matrix::image() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<Vec> cols;
    for (size_t p : pivots) cols.push_back(column(p));
    if (cols.empty()) return Matrix(rows_, 0);
    return from_columns(cols);
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    assert(b.size() == rows_);
    Matrix aug = hstack(*this, from_columns({b}));
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    Vec x(cols_);
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, cols_);
    return x;
}

Subspace::Subspace(const Matrix& generators) : ambient_(generators.rows()) {
    Matrix rows = generators.transpose();
    auto pivots = rows.rref();
    rref_rows_ = Matrix(pivots.size(), ambient_);
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t c = 0; c < ambient_; ++c) rref_rows_.at(r, c) = rows.at(r, c);
}

Subspace Subspace::zero(size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.rref_rows_ = Matrix(0, ambient_dim);
    return s;
}

size_t Subspace::dim() const { return rref_rows_.rows(); }

bool Subspace::contains(const Vec& v) const {
    if (is_zero(v)) return true;
    Matrix gens = rref_rows_.transpose();
    return gens.solve(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

std::vector<Vec> Subspace::basis() const {
    std::vector<Vec> out;
    for (size_t r = 0; r < rref_rows_.rows(); ++r) out.push_back(rref_rows_.row(r));
    return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    assert(a.ambient_ == b.ambient_);
    return Subspace(Matrix::hstack(a.rref_rows_.transpose(), b.rref_rows_.transpose()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    assert(a.ambient_ == b.ambient_);
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_);
    Matrix ga = a.rref_rows_.transpose();          // n x p
    Matrix gb = b.rref_rows_.transpose();          // n x q
    Matrix stacked = Matrix::hstack(ga, (Scalar{-1}) * gb);
    Matrix ker = stacked.kernel();                 // (p+q) x k
    std::vector<Vec> gens;
    for (size_t c = 0; c < ker.cols(); ++c) {
        Vec coeff(ga.cols());
        for (size_t r = 0; r < ga.cols(); ++r) coeff[r] = ker.at(r, c);
        gens.push_back(ga.apply(coeff));
    }
    if (gens.empty()) return Subspace::zero(a.ambient_);
    return Subspace(Matrix::from_columns(gens));
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rref_rows_ == b.rref_rows_;
}

}  // namespace dgbv
