#include "homint/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace homint {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows,
                         size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Scalar> Matrix::row(size_t r) const {
    std::vector<Scalar> v(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    return v;
}

std::vector<Scalar> Matrix::col(size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> r(rows_, field_->zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        size_t p = lead;
        while (p < r.rows() && r.at(p, c).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != lead)
            for (size_t j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(lead, j));
        Scalar inv = r.at(lead, c).inverse();
        for (size_t j = c; j < r.cols(); ++j) r.at(lead, j) = r.at(lead, j) * inv;
        for (size_t q = 0; q < r.rows(); ++q) {
            if (q == lead || r.at(q, c).is_zero()) continue;
            Scalar f = r.at(q, c);
            for (size_t j = c; j < r.cols(); ++j) r.at(q, j) -= f * r.at(lead, j);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {r, pivots};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

SubspacePresentation::SubspacePresentation(Matrix basis, std::vector<size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

SubspacePresentation SubspacePresentation::zero(FieldPtr field, size_t ambient) {
    return SubspacePresentation(Matrix(field, 0, ambient), {});
}

SubspacePresentation SubspacePresentation::from_spanning(const Matrix& rows) {
    RrefResult rr = rref(rows);
    Matrix basis(rows.field(), rr.pivots.size(), rows.cols());
    for (size_t r = 0; r < rr.pivots.size(); ++r)
        for (size_t c = 0; c < rows.cols(); ++c) basis.at(r, c) = rr.reduced.at(r, c);
    return SubspacePresentation(std::move(basis), rr.pivots);
}

std::vector<Scalar> SubspacePresentation::reduce(std::vector<Scalar> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("vector length mismatch");
    for (size_t r = 0; r < dim(); ++r) {
        const Scalar& f = v[pivots_[r]];
        if (f.is_zero()) continue;
        Scalar c = f;  // entry will change during the loop
        for (size_t j = 0; j < ambient(); ++j) v[j] -= c * basis_.at(r, j);
    }
    return v;
}

bool SubspacePresentation::contains(const std::vector<Scalar>& v) const {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool SubspacePresentation::operator==(const SubspacePresentation& o) const {
    return pivots_ == o.pivots_ && basis_ == o.basis_;
}

SubspacePresentation kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis_rows;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols(), m.field()->zero());
        v[f] = m.field()->one();
        for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced.at(r, f);
        basis_rows.push_back(std::move(v));
    }
    return SubspacePresentation::from_spanning(
        Matrix::from_rows(m.field(), basis_rows, m.cols()));
}

QuotientMap::QuotientMap(SubspacePresentation by) : by_(std::move(by)) {
    std::vector<bool> is_pivot(by_.ambient(), false);
    for (size_t p : by_.pivots()) is_pivot[p] = true;
    for (size_t c = 0; c < by_.ambient(); ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
}

std::vector<Scalar> QuotientMap::coords(const std::vector<Scalar>& v) const {
    auto w = by_.reduce(v);
    std::vector<Scalar> q;
    q.reserve(free_cols_.size());
    for (size_t c : free_cols_) q.push_back(w[c]);
    return q;
}

std::vector<Scalar> QuotientMap::section(const std::vector<Scalar>& q) const {
    if (q.size() != free_cols_.size()) throw std::invalid_argument("coordinate length mismatch");
    std::vector<Scalar> v(by_.ambient(), by_.basis().field()->zero());
    for (size_t i = 0; i < free_cols_.size(); ++i) v[free_cols_[i]] = q[i];
    return v;
}

}  // namespace homint
