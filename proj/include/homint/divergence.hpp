#pragma once

#include <functional>

#include "homint/calculus.hpp"

namespace homint {

/// The divergence nabla(f) = sum_i partial^sigma_i(f(omega_i)) attached to a
/// projectively free derivation, with partial^sigma from the double twist.
class Divergence {
public:
    /// Requires sigma_bar and sigma_hat on the calculus; the twisted partials
    /// are re-validated as a sigma_hat-twisted multi-derivation on the way.
    static Divergence build(CalculusPtr calc);

    const CalculusPtr& calculus() const { return calc_; }
    const LinOp& twisted_partial(size_t i) const { return twisted_[i]; }
    const Report& twist_validation() const { return twist_validation_; }

    Element apply(const HomElement& f) const;

    /// nabla(fa) = nabla(f) a + f(da) over the given hom elements and all
    /// check-basis a.
    Report check_law(const std::vector<HomElement>& homs, size_t max_violations = 10) const;

private:
    CalculusPtr calc_;
    std::vector<LinOp> twisted_;
    Report twist_validation_;
};

/// Image of nabla together with the cokernel coordinate map Lambda.
struct IntegralPresentation {
    SubspacePresentation image;
    QuotientMap lambda;

    size_t dim_coker() const { return lambda.target_dim(); }
    std::vector<Scalar> apply(const Element& e) const { return lambda.coords(e.dense()); }
};

/// Integral of a finite-dimensional instance: V = span nabla(hom basis),
/// Lambda = quotient coordinates with deterministic pivots.
IntegralPresentation integral(const Divergence& div, const std::vector<HomElement>& homs);

/// Uniform handle over a computed Lambda (vector-valued quotient coordinates)
/// or a claimed functional (scalar-valued), for the residual checks below.
struct IntegralMap {
    size_t dim = 0;
    std::function<std::vector<Scalar>(const Element&)> eval;
};
IntegralMap as_integral_map(const IntegralPresentation& p);
IntegralMap as_integral_map(const Functional& f);

struct WindowIntegralResult {
    Report report;
    size_t generators = 0;      // hom generators checked
    size_t image_span_dim = 0;  // k-dimension of span{nabla(f)} seen
};

/// Verifies a claimed integral functional on a graded instance: nonzero, and
/// vanishing on nabla(f) for every window hom generator.
WindowIntegralResult integral_window_check(const Divergence& div, const Functional& claimed,
                                           size_t max_violations = 10);

/// Lambda(a partial^sigma_i(b)) + sum_l Lambda(partial^sigma_l(a) sigma_hat_li(b));
/// zero for every free instance.
std::vector<Scalar> ibp_residual(const Divergence& div, const IntegralMap& lambda, size_t i,
                                 const Element& a, const Element& b);

/// Residuals over all check-basis pairs and all indices; free modules only.
Report ibp_report(const Divergence& div, const IntegralMap& lambda, size_t max_violations = 10);

/// Lambda(partial^sigma_i(a)) = 0 for all check-basis a and all i.
Report exactness_check(const Divergence& div, const IntegralMap& lambda,
                       size_t max_violations = 10);

/// Single scalar c with computed = c * reference on every basis vector, when
/// the cokernel is one-dimensional and such a c exists.
std::optional<Scalar> proportionality(const IntegralPresentation& p, const Functional& reference);

}  // namespace homint
