#include "homint/calculus.hpp"

namespace homint {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

std::pair<CalculusPtr, Report> Calculus::build_checked(AlgebraPtr algebra,
                                                       PreProjectiveSystem system,
                                                       MultiDerivation derivation,
                                                       std::optional<OpMatrix> sigma_bar,
                                                       std::optional<OpMatrix> sigma_hat,
                                                       size_t max_violations) {
    auto calc = std::shared_ptr<Calculus>(new Calculus());
    calc->algebra_ = std::move(algebra);
    calc->system_ = std::move(system);
    calc->derivation_ = std::move(derivation);
    calc->sigma_bar_ = std::move(sigma_bar);
    calc->sigma_hat_ = std::move(sigma_hat);
    calc->n_ = calc->system_.arity();
    if (calc->derivation_.arity() != calc->n_)
        throw std::invalid_argument("derivation arity != system size");
    for (size_t i = 0; i < calc->n_; ++i) {
        ModuleVec row;
        row.reserve(calc->n_);
        for (size_t j = 0; j < calc->n_; ++j) row.push_back(calc->system_.pi.at(i, j));
        calc->omega_.push_back(std::move(row));
    }
    for (size_t i = 0; i < calc->n_; ++i)
        for (size_t b : calc->algebra_->check_basis())
            calc->spanning_.push_back(
                calc->left_action(calc->algebra_->basis_element(b), calc->omega_[i]));
    if (!calc->algebra_->graded()) {
        std::vector<std::vector<Scalar>> rows;
        rows.reserve(calc->spanning_.size());
        for (const auto& m : calc->spanning_) rows.push_back(calc->vectorize(m));
        size_t ambient = calc->n_ * calc->algebra_->dim();
        calc->presentation_ = SubspacePresentation::from_spanning(
            Matrix::from_rows(calc->algebra_->field(), rows, ambient));
        for (size_t r = 0; r < calc->presentation_->dim(); ++r) {
            auto v = calc->presentation_->basis().row(r);
            ModuleVec m;
            for (size_t i = 0; i < calc->n_; ++i)
                m.push_back(calc->algebra_->from_dense(std::vector<Scalar>(
                    v.begin() + i * calc->algebra_->dim(),
                    v.begin() + (i + 1) * calc->algebra_->dim())));
            calc->kbasis_.push_back(std::move(m));
        }
    }
    Report report = calc->verify(max_violations);
    return {report.clean() ? calc : nullptr, std::move(report)};
}

CalculusPtr Calculus::build(AlgebraPtr algebra, PreProjectiveSystem system,
                            MultiDerivation derivation, std::optional<OpMatrix> sigma_bar,
                            std::optional<OpMatrix> sigma_hat) {
    auto [calc, report] = build_checked(std::move(algebra), std::move(system),
                                        std::move(derivation), std::move(sigma_bar),
                                        std::move(sigma_hat));
    if (!calc) throw CalculusError("calculus invariant failed: " + report.summary());
    return calc;
}

ProjectivelyFreeDerivation Calculus::projectively_free() const {
    if (!sigma_bar_ || !sigma_hat_)
        throw std::logic_error("projectively_free() needs sigma_bar and sigma_hat");
    return {derivation_, {system_, *sigma_bar_}, *sigma_hat_};
}

ModuleVec Calculus::right_action(const ModuleVec& m, const Element& a) const {
    AlgMatrix tilde_a = system_.sigma_tilde.eval(a);
    return system_.pi.apply_row(tilde_a.apply_row(m));
}

ModuleVec Calculus::left_action(const Element& a, const ModuleVec& m) const {
    ModuleVec r;
    r.reserve(m.size());
    for (const auto& c : m) r.push_back(a * c);
    return r;
}

Element Calculus::xi(size_t i, const ModuleVec& m) const {
    if (!sigma_bar_) throw std::logic_error("xi needs sigma_bar");
    Element acc(algebra_);
    for (size_t j = 0; j < n_; ++j) acc += sigma_bar_->at(i, j).apply(m[j]);
    return acc;
}

ModuleVec Calculus::d(const Element& a) const {
    ModuleVec row;
    row.reserve(n_);
    for (size_t i = 0; i < n_; ++i) row.push_back(derivation_.partial[i].apply(a));
    return system_.pi.apply_row(row);
}

bool Calculus::module_contains(const ModuleVec& m) const {
    return system_.pi.apply_row(m) == m;
}

size_t Calculus::module_dim() const {
    if (!presentation_) throw std::logic_error("module_dim needs a finite-dimensional algebra");
    return presentation_->dim();
}

const std::vector<ModuleVec>& Calculus::module_basis() const {
    if (!presentation_) throw std::logic_error("module_basis needs a finite-dimensional algebra");
    return kbasis_;
}

std::vector<Scalar> Calculus::vectorize(const ModuleVec& m) const {
    if (algebra_->graded()) throw std::logic_error("vectorize needs a finite-dimensional algebra");
    std::vector<Scalar> v;
    v.reserve(n_ * algebra_->dim());
    for (const auto& c : m) {
        auto dense = c.dense();
        v.insert(v.end(), dense.begin(), dense.end());
    }
    return v;
}

std::vector<Scalar> Calculus::module_coords(const ModuleVec& m) const {
    if (!presentation_) throw std::logic_error("module_coords needs a finite-dim algebra");
    std::vector<Scalar> v = vectorize(m);
    std::vector<Scalar> coords(presentation_->dim(), algebra_->field()->zero());
    for (size_t r = 0; r < presentation_->dim(); ++r) {
        Scalar c = v[presentation_->pivots()[r]];
        if (c.is_zero()) continue;
        coords[r] = c;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * presentation_->basis().at(r, j);
    }
    if (!all_zero(v)) throw CalculusError("vector outside the module span");
    return coords;
}

Report Calculus::verify(size_t max_violations) const {
    Report report(max_violations);
    const AlgebraPtr& A = algebra_;
    Element one = A->unit();
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (omega_[i][j] != system_.pi.at(i, j))
                report.add("calculus.eta_omega", "eta_j(omega_i) != pi_ij at (i,j)=(" +
                                                     std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1) + ")");
    for (size_t s = 0; s < spanning_.size(); ++s) {
        const ModuleVec& m = spanning_[s];
        // dual basis property sum_i eta_i(m) omega_i = m
        ModuleVec rebuilt(n_, Element(A));
        for (size_t i = 0; i < n_; ++i) {
            ModuleVec term = left_action(m[i], omega_[i]);
            for (size_t j = 0; j < n_; ++j) rebuilt[j] += term[j];
        }
        if (rebuilt != m) report.add("calculus.dual_basis", "spanning row " + std::to_string(s));
        if (right_action(m, one) != m)
            report.add("calculus.right_unital", "m * 1 != m at spanning row " +
                                                    std::to_string(s));
    }
    for (size_t i = 0; i < n_; ++i) {
        for (size_t pa : A->check_basis()) {
            Element a = A->basis_element(pa);
            // the two defining relation forms agree with the right action
            ModuleVec via_action = right_action(omega_[i], a);
            ModuleVec row_sigma(n_, Element(A)), row_tilde(n_, Element(A));
            for (size_t j = 0; j < n_; ++j) {
                row_sigma[j] = system_.sigma.at(i, j).apply(a);
                row_tilde[j] = system_.sigma_tilde.at(i, j).apply(a);
            }
            if (system_.pi.apply_row(row_sigma) != via_action ||
                system_.pi.apply_row(row_tilde) != via_action)
                report.add("calculus.relations",
                           "omega_" + std::to_string(i + 1) + " * a at a=" + A->label(pa));
            for (size_t pb : A->check_basis()) {
                Element b = A->basis_element(pb);
                if (right_action(via_action, b) != right_action(omega_[i], a * b))
                    report.add("calculus.right_associative",
                               "(omega_" + std::to_string(i + 1) + " a) b != omega (ab) at (a=" +
                                   A->label(pa) + ", b=" + A->label(pb) + ")");
            }
        }
    }
    // Leibniz rule and the pi-twisted differential
    auto twisted = pi_twist(derivation_, system_);
    report.merge(twisted.validation);
    for (size_t pa : A->check_basis()) {
        Element a = A->basis_element(pa);
        ModuleVec da = d(a);
        ModuleVec row(n_, Element(A));
        for (size_t i = 0; i < n_; ++i) row[i] = twisted.derivation.partial[i].apply(a);
        ModuleVec d_pi = system_.pi.apply_row(row);
        // d and the twisted differential are finite sums over the same module
        if (d_pi != da)
            report.add("calculus.pi_twist_differential", "d^pi(a) != d(a) at a=" + A->label(pa));
        for (size_t pb : A->check_basis()) {
            Element b = A->basis_element(pb);
            ModuleVec lhs = d(a * b);
            ModuleVec rhs = right_action(da, b);
            ModuleVec second = left_action(a, d(b));
            for (size_t j = 0; j < n_; ++j) rhs[j] += second[j];
            if (lhs != rhs)
                report.add("calculus.leibniz",
                           "d(ab) != d(a)b + a d(b) at (a=" + A->label(pa) + ", b=" +
                               A->label(pb) + ")");
        }
    }
    if (sigma_bar_) {
        for (size_t pa : A->check_basis()) {
            Element a = A->basis_element(pa);
            for (size_t i = 0; i < n_; ++i) {
                ModuleVec lhs = left_action(a, omega_[i]);
                ModuleVec rhs(n_, Element(A));
                for (size_t j = 0; j < n_; ++j) {
                    ModuleVec term = right_action(omega_[j], sigma_bar_->at(j, i).apply(a));
                    for (size_t k = 0; k < n_; ++k) rhs[k] += term[k];
                }
                if (lhs != rhs)
                    report.add("calculus.bar_relations",
                               "a omega_" + std::to_string(i + 1) +
                                   " != sum omega_j sigma_bar_ji(a) at a=" + A->label(pa));
            }
        }
        for (size_t s = 0; s < spanning_.size(); ++s) {
            const ModuleVec& m = spanning_[s];
            ModuleVec rebuilt(n_, Element(A));
            for (size_t i = 0; i < n_; ++i) {
                ModuleVec term = right_action(omega_[i], xi(i, m));
                for (size_t j = 0; j < n_; ++j) rebuilt[j] += term[j];
            }
            if (rebuilt != m)
                report.add("calculus.xi_dual",
                           "sum omega_i xi_i(m) != m at spanning row " + std::to_string(s));
            for (size_t pa : A->check_basis()) {
                Element a = A->basis_element(pa);
                ModuleVec ma = right_action(m, a);
                for (size_t i = 0; i < n_; ++i)
                    if (xi(i, ma) != xi(i, m) * a)
                        report.add("calculus.xi_right_linear",
                                   "xi_" + std::to_string(i + 1) +
                                       "(ma) != xi(m)a at spanning row " + std::to_string(s) +
                                       ", a=" + A->label(pa));
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// HomElement

HomElement HomElement::from_matrix(CalculusPtr calc, Matrix values) {
    if (values.rows() != calc->algebra()->dim() || values.cols() != calc->module_dim())
        throw std::invalid_argument("hom matrix must be d x module_dim");
    HomElement f;
    f.calc_ = std::move(calc);
    f.matrix_ = std::move(values);
    return f;
}

HomElement HomElement::from_omega_values(CalculusPtr calc, std::vector<Element> values) {
    if (values.size() != calc->rank()) throw std::invalid_argument("omega value count mismatch");
    HomElement f;
    f.calc_ = std::move(calc);
    f.omega_values_ = std::move(values);
    if (!f.calc_->algebra()->graded()) {
        // materialize the coordinate matrix through the xi expansion
        if (!f.calc_->sigma_bar()) throw std::logic_error("omega-value hom needs sigma_bar");
        Matrix m(f.calc_->algebra()->field(), f.calc_->algebra()->dim(), f.calc_->module_dim());
        for (size_t s = 0; s < f.calc_->module_dim(); ++s) {
            Element v(f.calc_->algebra());
            const ModuleVec& mb = f.calc_->module_basis()[s];
            for (size_t i = 0; i < f.calc_->rank(); ++i)
                v += f.omega_values_[i] * f.calc_->xi(i, mb);
            auto dense = v.dense();
            for (size_t r = 0; r < dense.size(); ++r) m.at(r, s) = dense[r];
        }
        f.matrix_ = std::move(m);
    }
    return f;
}

Element HomElement::eval(const ModuleVec& m) const {
    const AlgebraPtr& A = calc_->algebra();
    if (matrix_) {
        auto coords = calc_->module_coords(m);
        return A->from_dense(matrix_->apply(coords));
    }
    // free graded path: f(m) = sum_i f(omega_i) xi_i(m)
    Element acc(A);
    for (size_t i = 0; i < calc_->rank(); ++i) acc += omega_values_[i] * calc_->xi(i, m);
    return acc;
}

Element HomElement::omega_value(size_t i) const {
    if (matrix_) return eval(calc_->omega(i));
    return omega_values_[i];
}

std::vector<Element> HomElement::omega_values() const {
    std::vector<Element> v;
    v.reserve(calc_->rank());
    for (size_t i = 0; i < calc_->rank(); ++i) v.push_back(omega_value(i));
    return v;
}

HomElement HomElement::right_act(const Element& a) const {
    if (matrix_) {
        Matrix m(calc_->algebra()->field(), matrix_->rows(), matrix_->cols());
        for (size_t s = 0; s < calc_->module_dim(); ++s) {
            Element v = eval(calc_->left_action(a, calc_->module_basis()[s]));
            auto dense = v.dense();
            for (size_t r = 0; r < dense.size(); ++r) m.at(r, s) = dense[r];
        }
        return from_matrix(calc_, std::move(m));
    }
    // (f a)(omega_i) = f(a omega_i) = sum_j f(omega_j) sigma_bar_ji(a)
    std::vector<Element> values;
    values.reserve(calc_->rank());
    for (size_t i = 0; i < calc_->rank(); ++i) {
        Element acc(calc_->algebra());
        for (size_t j = 0; j < calc_->rank(); ++j)
            acc += omega_values_[j] * calc_->sigma_bar()->at(j, i).apply(a);
        values.push_back(std::move(acc));
    }
    return from_omega_values(calc_, std::move(values));
}

HomElement HomElement::operator+(const HomElement& o) const {
    if (matrix_) return from_matrix(calc_, *matrix_ + *o.matrix_);
    std::vector<Element> values;
    for (size_t i = 0; i < calc_->rank(); ++i)
        values.push_back(omega_values_[i] + o.omega_values_[i]);
    return from_omega_values(calc_, std::move(values));
}

HomElement HomElement::operator-(const HomElement& o) const {
    if (matrix_) return from_matrix(calc_, *matrix_ - *o.matrix_);
    std::vector<Element> values;
    for (size_t i = 0; i < calc_->rank(); ++i)
        values.push_back(omega_values_[i] - o.omega_values_[i]);
    return from_omega_values(calc_, std::move(values));
}

HomElement operator*(const Scalar& c, HomElement f) {
    if (f.matrix_) {
        for (size_t r = 0; r < f.matrix_->rows(); ++r)
            for (size_t s = 0; s < f.matrix_->cols(); ++s)
                f.matrix_->at(r, s) = c * f.matrix_->at(r, s);
        return f;
    }
    for (auto& v : f.omega_values_) v = c * v;
    return f;
}

bool HomElement::operator==(const HomElement& o) const {
    if (matrix_ && o.matrix_) return *matrix_ == *o.matrix_;
    return omega_values() == o.omega_values();
}

std::vector<HomElement> hom_basis(const CalculusPtr& calc) {
    const AlgebraPtr& A = calc->algebra();
    if (A->graded()) throw std::logic_error("hom_basis needs a finite-dim algebra");
    size_t d = A->dim();
    size_t md = calc->module_dim();
    const FieldPtr& F = A->field();
    size_t unknowns = md * d;  // x[(s,k)] = coefficient of e_k in f(basis_s)
    std::vector<std::vector<Scalar>> rows;
    for (size_t s = 0; s < md; ++s) {
        for (size_t t = 0; t < d; ++t) {
            Element et = A->basis_element(t);
            auto gamma = calc->module_coords(calc->right_action(calc->module_basis()[s], et));
            Matrix rmul = LinOp::right_mult(et).to_matrix();
            for (size_t k = 0; k < d; ++k) {
                std::vector<Scalar> row(unknowns, F->zero());
                for (size_t r = 0; r < md; ++r)
                    if (!gamma[r].is_zero()) row[r * d + k] += gamma[r];
                for (size_t m = 0; m < d; ++m) row[s * d + m] -= rmul.at(k, m);
                rows.push_back(std::move(row));
            }
        }
    }
    auto ker = kernel(Matrix::from_rows(F, rows, unknowns));
    std::vector<HomElement> basis;
    for (size_t b = 0; b < ker.dim(); ++b) {
        auto v = ker.basis().row(b);
        Matrix m(F, d, md);
        for (size_t s = 0; s < md; ++s)
            for (size_t k = 0; k < d; ++k) m.at(k, s) = v[s * d + k];
        basis.push_back(HomElement::from_matrix(calc, std::move(m)));
    }
    return basis;
}

std::vector<HomElement> hom_window_generators(const CalculusPtr& calc) {
    const AlgebraPtr& A = calc->algebra();
    if (!A->graded()) throw std::logic_error("hom_window_generators is the graded-case route");
    if (!calc->is_free() || !calc->sigma_bar())
        throw std::logic_error("window hom elements need a free module with sigma_bar");
    std::vector<HomElement> gens;
    for (size_t i = 0; i < calc->rank(); ++i)
        for (size_t b : A->check_basis()) {
            std::vector<Element> values(calc->rank(), Element(A));
            values[i] = A->basis_element(b);
            gens.push_back(HomElement::from_omega_values(calc, std::move(values)));
        }
    return gens;
}

Report check_hom_right_linear(const HomElement& f, size_t max_violations) {
    Report report(max_violations);
    const CalculusPtr& calc = f.calculus();
    const AlgebraPtr& A = calc->algebra();
    for (size_t s = 0; s < calc->spanning_rows().size(); ++s) {
        const ModuleVec& m = calc->spanning_rows()[s];
        Element fm = f.eval(m);
        for (size_t pa : A->check_basis()) {
            Element a = A->basis_element(pa);
            if (f.eval(calc->right_action(m, a)) != fm * a)
                report.add("hom.right_linear", "f(ma) != f(m)a at spanning row " +
                                                   std::to_string(s) + ", a=" + A->label(pa));
        }
    }
    return report;
}

HomElement reconstruct(const HomElement& f) {
    const CalculusPtr& calc = f.calculus();
    const AlgebraPtr& A = calc->algebra();
    if (!calc->sigma_bar() || !calc->sigma_hat())
        throw std::logic_error("reconstruct needs sigma_bar and sigma_hat");
    size_t n = calc->rank();
    std::vector<std::vector<Element>> c(n, std::vector<Element>(n, Element(A)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            c[i][k] = calc->sigma_hat()->at(i, k).apply(f.omega_value(k));
    auto eval_formula = [&](const ModuleVec& m) {
        Element acc(A);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) acc += calc->xi(i, calc->left_action(c[i][k], m));
        return acc;
    };
    if (!A->graded()) {
        Matrix mtx(A->field(), A->dim(), calc->module_dim());
        for (size_t s = 0; s < calc->module_dim(); ++s) {
            auto dense = eval_formula(calc->module_basis()[s]).dense();
            for (size_t r = 0; r < dense.size(); ++r) mtx.at(r, s) = dense[r];
        }
        return HomElement::from_matrix(calc, std::move(mtx));
    }
    std::vector<Element> values;
    values.reserve(n);
    for (size_t j = 0; j < n; ++j) values.push_back(eval_formula(calc->omega(j)));
    return HomElement::from_omega_values(calc, std::move(values));
}

}  // namespace homint
