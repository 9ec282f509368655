#pragma once

#include <vector>

#include "homint/scalar.hpp"

namespace homint {

/// Dense matrix over one field instance. All arithmetic exact.
class Matrix {
public:
    Matrix(FieldPtr field, size_t rows, size_t cols);
    static Matrix identity(FieldPtr field, size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows,
                            size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    std::vector<Scalar> row(size_t r) const;
    std::vector<Scalar> col(size_t c) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // column action
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<size_t> pivots;
};

/// Unique reduced row echelon form; leftmost-nonzero pivot rule.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Subspace of k^(ambient), stored as an RREF basis with its pivot columns.
class SubspacePresentation {
public:
    static SubspacePresentation zero(FieldPtr field, size_t ambient);
    static SubspacePresentation from_spanning(const Matrix& rows);

    size_t ambient() const { return basis_.cols(); }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Canonical coset representative: zeros at every pivot column.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;
    bool operator==(const SubspacePresentation& o) const;

private:
    SubspacePresentation(Matrix basis, std::vector<size_t> pivots);
    Matrix basis_;
    std::vector<size_t> pivots_;
};

SubspacePresentation kernel(const Matrix& m);

/// Coordinates on k^(ambient) / subspace, with the canonical section.
/// Coordinate order = ambient basis order with pivot columns removed.
class QuotientMap {
public:
    explicit QuotientMap(SubspacePresentation by);

    size_t ambient() const { return by_.ambient(); }
    size_t target_dim() const { return free_cols_.size(); }
    const std::vector<size_t>& free_columns() const { return free_cols_; }
    const SubspacePresentation& subspace() const { return by_; }

    std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
    std::vector<Scalar> section(const std::vector<Scalar>& q) const;

private:
    SubspacePresentation by_;
    std::vector<size_t> free_cols_;
};

}  // namespace homint
