#include "homint/divergence.hpp"

namespace homint {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

Divergence Divergence::build(CalculusPtr calc) {
    if (!calc->sigma_bar() || !calc->sigma_hat())
        throw std::logic_error("divergence needs a projectively free derivation");
    Divergence div;
    auto twist = sigma_twist(calc->projectively_free());
    div.twisted_ = std::move(twist.derivation.partial);
    div.twist_validation_ = std::move(twist.validation);
    div.calc_ = std::move(calc);
    return div;
}

Element Divergence::apply(const HomElement& f) const {
    Element acc(calc_->algebra());
    for (size_t i = 0; i < calc_->rank(); ++i) acc += twisted_[i].apply(f.omega_value(i));
    return acc;
}

Report Divergence::check_law(const std::vector<HomElement>& homs, size_t max_violations) const {
    Report report(max_violations);
    const AlgebraPtr& A = calc_->algebra();
    for (size_t s = 0; s < homs.size(); ++s) {
        const HomElement& f = homs[s];
        Element div_f = apply(f);
        for (size_t pa : A->check_basis()) {
            Element a = A->basis_element(pa);
            Element lhs = apply(f.right_act(a));
            Element rhs = div_f * a + f.eval(calc_->d(a));
            if (lhs != rhs)
                report.add("divergence.law", "nabla(fa) != nabla(f)a + f(da) at hom " +
                                                 std::to_string(s) + ", a=" + A->label(pa));
        }
    }
    return report;
}

IntegralPresentation integral(const Divergence& div, const std::vector<HomElement>& homs) {
    const AlgebraPtr& A = div.calculus()->algebra();
    if (A->graded()) throw std::logic_error("integral() needs a finite-dim algebra");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(homs.size());
    for (const auto& f : homs) rows.push_back(div.apply(f).dense());
    auto image = SubspacePresentation::from_spanning(
        Matrix::from_rows(A->field(), rows, A->dim()));
    QuotientMap lambda(image);
    return {std::move(image), std::move(lambda)};
}

IntegralMap as_integral_map(const IntegralPresentation& p) {
    return {p.dim_coker(), [p](const Element& e) { return p.apply(e); }};
}

IntegralMap as_integral_map(const Functional& f) {
    return {1, [f](const Element& e) { return std::vector<Scalar>{f.eval(e)}; }};
}

WindowIntegralResult integral_window_check(const Divergence& div, const Functional& claimed,
                                           size_t max_violations) {
    WindowIntegralResult out;
    out.report = Report(max_violations);
    if (claimed.is_zero()) {
        out.report.add("integral_window.zero", "claimed functional is identically zero");
        return out;
    }
    const CalculusPtr& calc = div.calculus();
    const AlgebraPtr& A = calc->algebra();
    auto gens = hom_window_generators(calc);
    out.generators = gens.size();
    std::vector<std::vector<Scalar>> images;
    for (size_t s = 0; s < gens.size(); ++s) {
        Element v = div.apply(gens[s]);
        if (!claimed.eval(v).is_zero())
            out.report.add("integral_window.residual",
                           "lambda(nabla(f)) != 0 at generator " + std::to_string(s) + " (" +
                               v.str() + ")");
        images.push_back(v.dense());
    }
    if (!images.empty())
        out.image_span_dim =
            SubspacePresentation::from_spanning(Matrix::from_rows(A->field(), images, A->dim()))
                .dim();
    return out;
}

std::vector<Scalar> ibp_residual(const Divergence& div, const IntegralMap& lambda, size_t i,
                                 const Element& a, const Element& b) {
    const CalculusPtr& calc = div.calculus();
    Element first = a * div.twisted_partial(i).apply(b);
    std::vector<Scalar> out = lambda.eval(first);
    for (size_t l = 0; l < calc->rank(); ++l) {
        Element term =
            div.twisted_partial(l).apply(a) * calc->sigma_hat()->at(l, i).apply(b);
        auto v = lambda.eval(term);
        for (size_t k = 0; k < out.size(); ++k) out[k] += v[k];
    }
    return out;
}

Report ibp_report(const Divergence& div, const IntegralMap& lambda, size_t max_violations) {
    Report report(max_violations);
    const CalculusPtr& calc = div.calculus();
    if (!calc->is_free()) {
        report.add("ibp.requires_free", "integration by parts needs pi = I");
        return report;
    }
    const AlgebraPtr& A = calc->algebra();
    for (size_t i = 0; i < calc->rank(); ++i)
        for (size_t pa : A->check_basis())
            for (size_t pb : A->check_basis()) {
                auto r = ibp_residual(div, lambda, i, A->basis_element(pa),
                                      A->basis_element(pb));
                if (!all_zero(r))
                    report.add("ibp.residual", "i=" + std::to_string(i + 1) + " (a=" +
                                                   A->label(pa) + ", b=" + A->label(pb) + ")");
            }
    return report;
}

Report exactness_check(const Divergence& div, const IntegralMap& lambda, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = div.calculus()->algebra();
    for (size_t i = 0; i < div.calculus()->rank(); ++i)
        for (size_t pa : A->check_basis()) {
            auto v = lambda.eval(div.twisted_partial(i).apply(A->basis_element(pa)));
            if (!all_zero(v))
                report.add("exactness", "lambda(partial^sigma_" + std::to_string(i + 1) +
                                            "(a)) != 0 at a=" + A->label(pa));
        }
    return report;
}

std::optional<Scalar> proportionality(const IntegralPresentation& p,
                                      const Functional& reference) {
    if (p.dim_coker() != 1) return std::nullopt;
    const AlgebraPtr& A = reference.alg;
    std::optional<Scalar> ratio;
    for (size_t b = 0; b < A->dim(); ++b) {
        Element eb = A->basis_element(b);
        Scalar computed = p.apply(eb)[0];
        Scalar ref = reference.eval(eb);
        if (ref.is_zero()) {
            if (!computed.is_zero()) return std::nullopt;
            continue;
        }
        Scalar c = computed / ref;
        if (!ratio)
            ratio = c;
        else if (*ratio != c)
            return std::nullopt;
    }
    if (ratio && ratio->is_zero()) return std::nullopt;
    return ratio;
}

}  // namespace homint
