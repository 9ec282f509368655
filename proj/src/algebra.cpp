#include "homint/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace homint {

namespace {

std::string graded_label(const GradedKey& k) {
    std::string z;
    if (k.z_degree == 1)
        z = "z";
    else if (k.z_degree != 0)
        z = "z^" + std::to_string(k.z_degree);
    if (!k.odd) return z.empty() ? "1" : z;
    return z.empty() ? "theta" : z + "*theta";
}

}  // namespace

std::optional<size_t> Algebra::index_of_label(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Element Algebra::zero() const { return Element(shared_from_this()); }

Element Algebra::unit() const {
    Element e(shared_from_this());
    for (size_t i = 0; i < unit_.size(); ++i)
        if (!unit_[i].is_zero()) e.set(i, unit_[i]);
    return e;
}

Element Algebra::basis_element(size_t i) const {
    Element e(shared_from_this());
    e.set(i, field_->one());
    return e;
}

Element Algebra::from_dense(const std::vector<Scalar>& coeffs) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("coefficient vector length mismatch");
    Element e(shared_from_this());
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) e.set(i, coeffs[i]);
    return e;
}

GradedKey Algebra::key(size_t i) const {
    if (!graded()) throw std::logic_error("key() on a finite-dimensional algebra");
    return {static_cast<long>(i / 2) - cap_, i % 2 == 1};
}

std::optional<size_t> Algebra::index_of_key(const GradedKey& k) const {
    if (!graded()) return std::nullopt;
    if (k.z_degree < -cap_ || k.z_degree > cap_) return std::nullopt;
    return static_cast<size_t>(k.z_degree + cap_) * 2 + (k.odd ? 1 : 0);
}

Element Algebra::basis_product(size_t i, size_t j) const {
    Element r(shared_from_this());
    if (kind_ == Kind::finite_dim) {
        for (const auto& [k, c] : table_[i][j]) r.set(k, c);
        return r;
    }
    GradedKey a = key(i), b = key(j);
    if (a.odd && b.odd) return r;  // theta^2 = 0
    long z = a.z_degree + b.z_degree;
    auto idx = index_of_key({z, a.odd || b.odd});
    if (!idx)
        throw WindowOverflowError("product degree z^" + std::to_string(z) +
                                  " escapes the degree headroom (window " +
                                  std::to_string(window_) + "); enlarge the window");
    r.set(*idx, field_->one());
    return r;
}

void Algebra::validate_finite() const {
    size_t d = dim();
    if (unit_.size() != d) throw AlgebraError("unit vector length mismatch");
    if (table_.size() != d) throw AlgebraError("structure constant grid not d x d");
    for (const auto& row : table_)
        if (row.size() != d) throw AlgebraError("structure constant grid not d x d");
    Element u = unit();
    for (size_t i = 0; i < d; ++i) {
        Element ei = basis_element(i);
        if (u * ei != ei || ei * u != ei)
            throw AlgebraError("unit axiom fails on basis '" + labels_[i] + "'");
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                Element lhs = basis_product(i, j) * basis_element(k);
                Element rhs = basis_element(i) * basis_product(j, k);
                if (lhs != rhs)
                    throw AlgebraError("associativity fails on (" + labels_[i] + ", " +
                                       labels_[j] + ", " + labels_[k] + ")");
            }
}

void Algebra::validate_graded() const {
    Element u = unit();
    for (size_t i = 0; i < dim(); ++i) {
        Element ei = basis_element(i);
        if (u * ei != ei || ei * u != ei)
            throw AlgebraError("unit axiom fails on basis '" + labels_[i] + "'");
    }
    for (size_t i : check_idx_)
        for (size_t j : check_idx_)
            for (size_t k : check_idx_) {
                Element lhs = basis_product(i, j) * basis_element(k);
                Element rhs = basis_element(i) * basis_product(j, k);
                if (lhs != rhs)
                    throw AlgebraError("associativity fails on (" + labels_[i] + ", " +
                                       labels_[j] + ", " + labels_[k] + ")");
            }
}

AlgebraPtr Algebra::finite(FieldPtr field, std::vector<std::string> labels,
                           std::vector<std::vector<std::vector<Scalar>>> structure,
                           std::vector<Scalar> unit) {
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->kind_ = Kind::finite_dim;
    alg->field_ = std::move(field);
    alg->labels_ = std::move(labels);
    size_t d = alg->labels_.size();
    if (d == 0) throw AlgebraError("algebra dimension must be positive");
    if (structure.size() != d) throw AlgebraError("structure constant grid not d x d");
    alg->table_.assign(d, std::vector<std::map<size_t, Scalar>>(d));
    for (size_t i = 0; i < d; ++i) {
        if (structure[i].size() != d) throw AlgebraError("structure constant grid not d x d");
        for (size_t j = 0; j < d; ++j) {
            if (structure[i][j].size() != d)
                throw AlgebraError("structure constant vector length mismatch");
            for (size_t k = 0; k < d; ++k)
                if (!structure[i][j][k].is_zero()) alg->table_[i][j][k] = structure[i][j][k];
        }
    }
    alg->unit_ = std::move(unit);
    for (size_t i = 0; i < d; ++i) alg->check_idx_.push_back(i);
    alg->validate_finite();
    return alg;
}

AlgebraPtr Algebra::functions_on_group(const std::vector<std::vector<int>>& table,
                                       std::vector<std::string> labels) {
    size_t d = table.size();
    if (d == 0) throw AlgebraError("empty group table");
    for (const auto& row : table) {
        if (row.size() != d) throw AlgebraError("group table not square");
        for (int v : row)
            if (v < 0 || static_cast<size_t>(v) >= d)
                throw AlgebraError("group table entry out of range");
    }
    std::optional<size_t> identity;
    for (size_t e = 0; e < d; ++e) {
        bool ok = true;
        for (size_t j = 0; j < d && ok; ++j)
            ok = table[e][j] == static_cast<int>(j) && table[j][e] == static_cast<int>(j);
        if (ok) {
            identity = e;
            break;
        }
    }
    if (!identity) throw AlgebraError("group table has no identity");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw AlgebraError("group table not associative");
    for (size_t i = 0; i < d; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < d && !has_inverse; ++j)
            has_inverse = table[i][j] == static_cast<int>(*identity) &&
                          table[j][i] == static_cast<int>(*identity);
        if (!has_inverse) throw AlgebraError("group table element without inverse");
    }
    if (labels.empty())
        for (size_t i = 0; i < d; ++i) labels.push_back("e_" + std::to_string(i));
    if (labels.size() != d) throw AlgebraError("label count mismatch");

    FieldPtr field = Field::rationals();
    std::vector<std::vector<std::vector<Scalar>>> structure(
        d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d, field->zero())));
    for (size_t i = 0; i < d; ++i) structure[i][i][i] = field->one();  // pointwise product
    std::vector<Scalar> unit(d, field->one());
    auto alg = std::const_pointer_cast<Algebra>(finite(field, std::move(labels),
                                                       std::move(structure), std::move(unit)));
    alg->group_identity_ = identity;
    alg->group_table_ = table;
    return alg;
}

AlgebraPtr Algebra::laurent_grassmann(int window) {
    if (window < 1) throw AlgebraError("window must be >= 1");
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->kind_ = Kind::graded;
    alg->field_ = Field::rationals();
    alg->window_ = window;
    alg->cap_ = 4 * window;
    for (long k = -alg->cap_; k <= alg->cap_; ++k)
        for (int odd = 0; odd <= 1; ++odd)
            alg->labels_.push_back(graded_label({k, odd == 1}));
    alg->unit_.assign(alg->dim(), alg->field_->zero());
    alg->unit_[*alg->index_of_key({0, false})] = alg->field_->one();
    for (long k = -window; k <= window; ++k)
        for (int odd = 0; odd <= 1; ++odd)
            alg->check_idx_.push_back(*alg->index_of_key({k, odd == 1}));
    std::sort(alg->check_idx_.begin(), alg->check_idx_.end());
    alg->validate_graded();
    return alg;
}

AlgebraPtr Algebra::grassmann_extension(const AlgebraPtr& base) {
    if (base->graded()) throw AlgebraError("grassmann_extension needs a finite-dimensional base");
    size_t d = base->dim();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (base->basis_product(i, j) != base->basis_product(j, i))
                throw AlgebraError("grassmann_extension needs a commutative base");
    FieldPtr field = base->field();
    std::vector<std::string> labels = base->labels();
    for (size_t i = 0; i < d; ++i) labels.push_back(base->label(i) + "*theta");
    // index i = base element, d + i = base element times theta
    std::vector<std::vector<std::vector<Scalar>>> structure(
        2 * d, std::vector<std::vector<Scalar>>(2 * d, std::vector<Scalar>(2 * d, field->zero())));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            auto prod = base->basis_product(i, j).dense();
            for (size_t k = 0; k < d; ++k) {
                structure[i][j][k] = prod[k];
                structure[i][d + j][d + k] = prod[k];
                structure[d + i][j][d + k] = prod[k];
                // (x theta)(y theta) = 0
            }
        }
    std::vector<Scalar> unit(2 * d, field->zero());
    auto base_unit = base->unit().dense();
    for (size_t i = 0; i < d; ++i) unit[i] = base_unit[i];
    return finite(field, std::move(labels), std::move(structure), std::move(unit));
}

// ---------------------------------------------------------------------------
// Element

void Element::require_same(const Element& o) const {
    if (alg_.get() != o.alg_.get()) throw AlgebraError("mixed-algebra operands");
}

Scalar Element::coefficient(size_t i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? alg_->field()->zero() : it->second;
}

void Element::set(size_t i, const Scalar& c) {
    if (i >= alg_->dim()) throw std::out_of_range("basis index out of range");
    if (c.is_zero())
        terms_.erase(i);
    else
        terms_[i] = c;
}

void Element::add(size_t i, const Scalar& c) { set(i, coefficient(i) + c); }

Element Element::operator-() const {
    Element r = *this;
    for (auto& [i, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    require_same(o);
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same(o);
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    a.require_same(b);
    Element r(a.alg_);
    for (const auto& [i, ci] : a.terms_)
        for (const auto& [j, cj] : b.terms_) {
            Element p = a.alg_->basis_product(i, j);
            Scalar c = ci * cj;
            for (const auto& [k, ck] : p.terms()) r.add(k, c * ck);
        }
    return r;
}

Element operator*(const Scalar& c, Element a) {
    if (c.is_zero()) return Element(a.alg_);
    for (auto& [i, ci] : a.terms_) ci = c * ci;
    return a;
}

bool Element::operator==(const Element& o) const {
    require_same(o);
    return terms_ == o.terms_;
}

std::vector<Scalar> Element::dense() const {
    std::vector<Scalar> v(alg_->dim(), alg_->field()->zero());
    for (const auto& [i, c] : terms_) v[i] = c;
    return v;
}

std::vector<Scalar> Element::dense(const std::vector<size_t>& indices) const {
    std::vector<Scalar> v;
    v.reserve(indices.size());
    for (size_t i : indices) v.push_back(coefficient(i));
    return v;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    Scalar one = alg_->field()->one();
    for (const auto& [i, c] : terms_) {
        Scalar coeff = c;
        bool negative = false;
        if (coeff.is_rational() && numerator(coeff.rat()) < 0) {
            negative = true;
            coeff = -coeff;
        }
        std::string term;
        const std::string& label = alg_->label(i);
        if (label == "1")
            term = coeff.str();
        else if (coeff == one)
            term = label;
        else
            term = coeff.str() + "*" + label;
        if (first) {
            s = negative ? "-" + term : term;
            first = false;
        } else {
            s += negative ? " - " + term : " + " + term;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// LinOp

LinOp LinOp::zero(const AlgebraPtr& alg) {
    LinOp f;
    f.alg_ = alg;
    f.images_.assign(alg->dim(), Element(alg));
    return f;
}

LinOp LinOp::identity(const AlgebraPtr& alg) {
    return from_rule(alg, [&](size_t i) { return alg->basis_element(i); });
}

LinOp LinOp::from_images(AlgebraPtr alg, std::vector<Element> images) {
    if (images.size() != alg->dim()) throw std::invalid_argument("image count mismatch");
    LinOp f;
    f.alg_ = std::move(alg);
    f.images_ = std::move(images);
    return f;
}

LinOp LinOp::from_rule(const AlgebraPtr& alg, const std::function<Element(size_t)>& rule) {
    std::vector<Element> images;
    images.reserve(alg->dim());
    for (size_t i = 0; i < alg->dim(); ++i) images.push_back(rule(i));
    return from_images(alg, std::move(images));
}

LinOp LinOp::from_matrix(const AlgebraPtr& alg, const Matrix& m) {
    if (m.rows() != alg->dim() || m.cols() != alg->dim())
        throw std::invalid_argument("operator matrix must be d x d");
    return from_rule(alg, [&](size_t c) { return alg->from_dense(m.col(c)); });
}

LinOp LinOp::right_mult(const Element& c) {
    const AlgebraPtr& alg = c.algebra();
    return from_rule(alg, [&](size_t i) { return alg->basis_element(i) * c; });
}

LinOp LinOp::left_mult(const Element& c) {
    const AlgebraPtr& alg = c.algebra();
    return from_rule(alg, [&](size_t i) { return c * alg->basis_element(i); });
}

Element LinOp::apply(const Element& e) const {
    if (e.algebra().get() != alg_.get()) throw AlgebraError("mixed-algebra operands");
    Element r(alg_);
    for (const auto& [i, c] : e.terms()) r += c * images_[i];
    return r;
}

LinOp LinOp::compose(const LinOp& inner) const {
    if (inner.alg_.get() != alg_.get()) throw AlgebraError("mixed-algebra operands");
    LinOp f;
    f.alg_ = alg_;
    f.images_.reserve(images_.size());
    for (const auto& img : inner.images_) f.images_.push_back(apply(img));
    return f;
}

LinOp LinOp::operator+(const LinOp& o) const {
    LinOp f = *this;
    for (size_t i = 0; i < images_.size(); ++i) f.images_[i] += o.images_[i];
    return f;
}

LinOp LinOp::operator-() const {
    LinOp f = *this;
    for (auto& img : f.images_) img = -img;
    return f;
}

LinOp LinOp::operator-(const LinOp& o) const { return *this + (-o); }

LinOp operator*(const Scalar& c, LinOp f) {
    for (auto& img : f.images_) img = c * img;
    return f;
}

bool LinOp::operator==(const LinOp& o) const { return images_ == o.images_; }

bool LinOp::equal_on_check_basis(const LinOp& o) const {
    for (size_t i : alg_->check_basis())
        if (images_[i] != o.images_[i]) return false;
    return true;
}

Matrix LinOp::to_matrix() const {
    if (alg_->graded()) throw std::logic_error("to_matrix on a graded algebra operator");
    Matrix m(alg_->field(), alg_->dim(), alg_->dim());
    for (size_t c = 0; c < alg_->dim(); ++c) {
        auto col = images_[c].dense();
        for (size_t r = 0; r < alg_->dim(); ++r) m.at(r, c) = col[r];
    }
    return m;
}

// ---------------------------------------------------------------------------
// OpMatrix

OpMatrix::OpMatrix(AlgebraPtr alg, size_t n)
    : alg_(std::move(alg)), n_(n), entries_(n * n, LinOp::zero(alg_)) {}

OpMatrix OpMatrix::identity(const AlgebraPtr& alg, size_t n) {
    OpMatrix m(alg, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LinOp::identity(alg);
    return m;
}

OpMatrix OpMatrix::embed(const AlgMatrix& p) {
    OpMatrix m(p.algebra(), p.size());
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j) m.at(i, j) = LinOp::right_mult(p.at(i, j));
    return m;
}

OpMatrix OpMatrix::bullet(const OpMatrix& g) const {
    if (n_ != g.n_) throw std::invalid_argument("operator matrix size mismatch");
    OpMatrix r(alg_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            LinOp sum = LinOp::zero(alg_);
            for (size_t k = 0; k < n_; ++k) sum = sum + at(i, k).compose(g.at(k, j));
            r.at(i, j) = std::move(sum);
        }
    return r;
}

OpMatrix OpMatrix::transpose() const {
    OpMatrix r(alg_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

AlgMatrix OpMatrix::eval(const Element& a) const {
    AlgMatrix m(alg_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j).apply(a);
    return m;
}

bool OpMatrix::equal_on_check_basis(const OpMatrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < n_ * n_; ++i)
        if (!entries_[i].equal_on_check_basis(o.entries_[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// AlgMatrix

AlgMatrix::AlgMatrix(AlgebraPtr alg, size_t n)
    : alg_(std::move(alg)), n_(n), entries_(n * n, Element(alg_)) {}

AlgMatrix AlgMatrix::identity(const AlgebraPtr& alg, size_t n) {
    AlgMatrix m(alg, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = alg->unit();
    return m;
}

AlgMatrix AlgMatrix::operator*(const AlgMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    AlgMatrix r(alg_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            Element sum(alg_);
            for (size_t k = 0; k < n_; ++k) sum += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(sum);
        }
    return r;
}

AlgMatrix AlgMatrix::operator+(const AlgMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    AlgMatrix r = *this;
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

AlgMatrix AlgMatrix::operator-(const AlgMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    AlgMatrix r = *this;
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

bool AlgMatrix::operator==(const AlgMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
}

bool AlgMatrix::is_identity() const { return *this == identity(alg_, n_); }

AlgMatrix AlgMatrix::transpose() const {
    AlgMatrix r(alg_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Element> AlgMatrix::apply_row(const std::vector<Element>& row) const {
    if (row.size() != n_) throw std::invalid_argument("row length mismatch");
    std::vector<Element> r(n_, Element(alg_));
    for (size_t j = 0; j < n_; ++j)
        for (size_t i = 0; i < n_; ++i) r[j] += row[i] * at(i, j);
    return r;
}

}  // namespace homint
