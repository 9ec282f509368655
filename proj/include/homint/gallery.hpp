#pragma once

#include "homint/divergence.hpp"
#include "homint/hopf.hpp"

namespace homint {

/// One workbench problem: an algebra, a twisted multi-derivation with its
/// (pre-)projective system, and whatever optional data the checks can use.
struct Instance {
    std::string name;
    AlgebraPtr algebra;
    MultiDerivation derivation;
    PreProjectiveSystem pre;
    std::optional<OpMatrix> sigma_bar;
    std::optional<OpMatrix> sigma_hat;
    std::optional<Functional> lambda_claimed;  // graded instances: claimed integral
    std::optional<Functional> reference;       // normalization reference (e.g. Haar)
    std::optional<std::vector<size_t>> hopf_subset;
    std::optional<std::vector<Element>> inner_delta;

    bool projectively_free_data() const { return sigma_bar.has_value() && sigma_hat.has_value(); }
    ProjectivelyFreeDerivation projectively_free() const {
        if (!projectively_free_data())
            throw std::logic_error("instance lacks sigma_bar / sigma_hat");
        return {derivation, {pre, *sigma_bar}, *sigma_hat};
    }
    /// Hopf data rebuilt from the algebra's group table and the subset.
    std::optional<HopfData> hopf() const;
};

/// Inner multi-derivation partial_i(a) = sum_j delta_j sigma_ji(a) - a delta_i
/// for an algebra map sigma. Validity is certified by check_multiderivation.
MultiDerivation inner_calculus(const OpMatrix& sigma, const std::vector<Element>& delta);

/// d(a) = D a - a D with D = sum_i delta_i omega_i, on all check-basis a.
Report inner_differential_check(const Instance& inst, const CalculusPtr& calc,
                                size_t max_violations = 10);

/// Lambda(sum_{k,l} sigma_bar_kl(delta_l) sigma_hat_ki(a)) =
/// Lambda(sum_l a sigma_bar_il(delta_l)) for all check-basis a and indices i.
Report inner_integral_identity(const Instance& inst, const IntegralMap& lambda,
                               size_t max_violations = 10);

// Builtin instances.
Instance z2_haar();
Instance z3_haar();
Instance inner_z2();
Instance supercircle(int window);
Instance preproj_toy();

/// Randomized commutative aPi system: sigma = sigma_tilde = (a -> a pi) over
/// functions on `points` points, with a random idempotent pi of size n.
Instance random_commutative_api(unsigned seed, size_t n, size_t points);

std::vector<std::string> gallery_names();
/// Resolves "z2-haar", "z3-haar", "inner-z2", "preproj-toy", "supercircle:<W>".
Instance gallery_instance(const std::string& name);

}  // namespace homint
