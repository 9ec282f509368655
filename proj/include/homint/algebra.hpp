#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homint/matrix.hpp"
#include "homint/scalar.hpp"

namespace homint {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraError : std::runtime_error {
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

struct WindowOverflowError : std::runtime_error {
    explicit WindowOverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Degree data of a graded basis vector: z-exponent and Grassmann parity.
struct GradedKey {
    long z_degree = 0;
    bool odd = false;
    bool operator==(const GradedKey&) const = default;
};

class Element;

/// Basis-presented associative unital algebra over an exact field.
///
/// Finite-dimensional algebras come from structure constants (associativity
/// and the two-sided unit are verified on all basis triples at construction).
/// The graded variant models Laurent-Grassmann coefficients z^k theta^eps: a
/// verification window W bounds every axiom check, and an internal degree
/// headroom of 4W keeps products of window elements representable; anything
/// escaping the headroom raises WindowOverflowError.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    enum class Kind { finite_dim, graded };

    static AlgebraPtr finite(FieldPtr field, std::vector<std::string> labels,
                             std::vector<std::vector<std::vector<Scalar>>> structure,
                             std::vector<Scalar> unit);
    /// k-valued functions on a finite group (basis = indicator functions).
    /// Validates that the table is a group; labels default to e_0, e_1, ...
    static AlgebraPtr functions_on_group(const std::vector<std::vector<int>>& table,
                                         std::vector<std::string> labels = {});
    static AlgebraPtr laurent_grassmann(int window);
    /// Adjoin a Grassmann generator to a finite commutative algebra:
    /// basis doubles, theta^2 = 0, theta commutes with the base.
    static AlgebraPtr grassmann_extension(const AlgebraPtr& base);

    Kind kind() const { return kind_; }
    bool graded() const { return kind_ == Kind::graded; }
    int window() const { return window_; }
    int degree_cap() const { return cap_; }
    size_t dim() const { return labels_.size(); }
    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    std::optional<size_t> index_of_label(const std::string& label) const;

    /// Basis indices every axiom check quantifies over (|z-degree| <= W for
    /// the graded variant, everything otherwise).
    const std::vector<size_t>& check_basis() const { return check_idx_; }

    Element zero() const;
    Element unit() const;
    Element basis_element(size_t i) const;
    Element basis_product(size_t i, size_t j) const;
    Element from_dense(const std::vector<Scalar>& coeffs) const;

    GradedKey key(size_t i) const;  // graded only
    std::optional<size_t> index_of_key(const GradedKey& k) const;

    /// Identity index of the group this algebra was built from, if any.
    std::optional<size_t> group_identity() const { return group_identity_; }
    const std::vector<std::vector<int>>& group_table() const { return group_table_; }

private:
    Algebra() = default;
    void validate_finite() const;
    void validate_graded() const;

    Kind kind_ = Kind::finite_dim;
    FieldPtr field_;
    std::vector<std::string> labels_;
    std::vector<Scalar> unit_;
    std::vector<std::vector<std::map<size_t, Scalar>>> table_;  // finite only
    int window_ = 0, cap_ = 0;                                  // graded only
    std::vector<size_t> check_idx_;
    std::optional<size_t> group_identity_;
    std::vector<std::vector<int>> group_table_;
};

/// Finitely supported k-linear combination of basis vectors of one algebra.
class Element {
public:
    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(size_t i) const;
    void set(size_t i, const Scalar& c);
    void add(size_t i, const Scalar& c);
    const std::map<size_t, Scalar>& terms() const { return terms_; }

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);  // algebra product
    friend Element operator*(const Scalar& c, Element a);
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::vector<Scalar> dense() const;  // full active basis
    std::vector<Scalar> dense(const std::vector<size_t>& indices) const;
    std::string str() const;

private:
    void require_same(const Element& o) const;
    AlgebraPtr alg_;
    std::map<size_t, Scalar> terms_;  // index -> nonzero coefficient
};

/// k-linear operator on an algebra, materialized by its basis images.
class LinOp {
public:
    LinOp() = default;
    static LinOp zero(const AlgebraPtr& alg);
    static LinOp identity(const AlgebraPtr& alg);
    static LinOp from_images(AlgebraPtr alg, std::vector<Element> images);
    static LinOp from_rule(const AlgebraPtr& alg, const std::function<Element(size_t)>& rule);
    static LinOp from_matrix(const AlgebraPtr& alg, const Matrix& m);
    static LinOp right_mult(const Element& c);
    static LinOp left_mult(const Element& c);

    const AlgebraPtr& algebra() const { return alg_; }
    const Element& basis_image(size_t i) const { return images_[i]; }
    Element apply(const Element& e) const;
    LinOp compose(const LinOp& inner) const;  // this after inner

    LinOp operator+(const LinOp& o) const;
    LinOp operator-() const;
    LinOp operator-(const LinOp& o) const;
    friend LinOp operator*(const Scalar& c, LinOp f);
    bool operator==(const LinOp& o) const;  // all active basis images
    bool equal_on_check_basis(const LinOp& o) const;
    Matrix to_matrix() const;  // finite-dimensional algebras only

private:
    AlgebraPtr alg_;
    std::vector<Element> images_;
};

class AlgMatrix;

/// Square matrix of operators: an element of M_n(End_k A). The product
/// `bullet` composes entries with the right factor applied first.
class OpMatrix {
public:
    OpMatrix() = default;
    OpMatrix(AlgebraPtr alg, size_t n);
    static OpMatrix identity(const AlgebraPtr& alg, size_t n);
    /// Right-multiplication embedding of M_n(A): entry (i,j) becomes a -> a*p_ij.
    static OpMatrix embed(const AlgMatrix& p);

    size_t size() const { return n_; }
    const AlgebraPtr& algebra() const { return alg_; }
    LinOp& at(size_t i, size_t j) { return entries_[i * n_ + j]; }
    const LinOp& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }

    OpMatrix bullet(const OpMatrix& g) const;
    OpMatrix transpose() const;
    AlgMatrix eval(const Element& a) const;  // entrywise application
    bool equal_on_check_basis(const OpMatrix& o) const;

private:
    AlgebraPtr alg_;
    size_t n_ = 0;
    std::vector<LinOp> entries_;
};

/// Finitely supported linear functional on an algebra, given by its values
/// on basis vectors (unlisted basis vectors map to zero).
struct Functional {
    AlgebraPtr alg;
    std::map<size_t, Scalar> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void set(size_t i, const Scalar& c) {
        if (c.is_zero())
            coeffs.erase(i);
        else
            coeffs[i] = c;
    }
    Scalar eval(const Element& e) const {
        Scalar acc = alg->field()->zero();
        for (const auto& [i, c] : e.terms()) {
            auto it = coeffs.find(i);
            if (it != coeffs.end()) acc += it->second * c;
        }
        return acc;
    }
};

/// Square matrix with algebra entries (noncommutative matrix algebra).
class AlgMatrix {
public:
    AlgMatrix() = default;
    AlgMatrix(AlgebraPtr alg, size_t n);
    static AlgMatrix identity(const AlgebraPtr& alg, size_t n);

    size_t size() const { return n_; }
    const AlgebraPtr& algebra() const { return alg_; }
    Element& at(size_t i, size_t j) { return entries_[i * n_ + j]; }
    const Element& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }

    AlgMatrix operator*(const AlgMatrix& o) const;
    AlgMatrix operator+(const AlgMatrix& o) const;
    AlgMatrix operator-(const AlgMatrix& o) const;
    bool operator==(const AlgMatrix& o) const;
    bool operator!=(const AlgMatrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_idempotent() const { return *this * *this == *this; }
    AlgMatrix transpose() const;

    /// row * matrix with entries multiplied on the right: (v P)_j = sum_i v_i P_ij.
    std::vector<Element> apply_row(const std::vector<Element>& row) const;

private:
    AlgebraPtr alg_;
    size_t n_ = 0;
    std::vector<Element> entries_;
};

}  // namespace homint
