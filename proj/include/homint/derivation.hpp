#pragma once

#include <optional>

#include "homint/algebra.hpp"
#include "homint/report.hpp"

namespace homint {

/// Raised when a consequence that is guaranteed by the defining axioms fails
/// while the axioms themselves pass: an implementation bug, not bad input.
struct InternalInconsistencyError : std::runtime_error {
    explicit InternalInconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Right twisted multi-derivation (partial, sigma):
/// partial_i(ab) = sum_j partial_j(a) sigma_ji(b) + a partial_i(b).
struct MultiDerivation {
    std::vector<LinOp> partial;
    OpMatrix sigma;

    size_t arity() const { return partial.size(); }
    const AlgebraPtr& algebra() const { return sigma.algebra(); }
};

/// (pi, sigma, sigma_tilde) with pi idempotent and
///   sigma_tilde(b) sigma(a) pi = sigma_tilde(ba) pi,
///   sigma_tilde(1) = pi,
///   sigma(a) pi = pi sigma_tilde(a)        (all in M_n(A)).
struct PreProjectiveSystem {
    AlgMatrix pi;
    OpMatrix sigma;
    OpMatrix sigma_tilde;

    size_t arity() const { return pi.size(); }
    const AlgebraPtr& algebra() const { return pi.algebra(); }
};

/// Pre-projective system plus an algebra map sigma_bar with
///   sigma_bar . sigma_tilde^T = I   and   sigma^T . sigma_bar = embed(pi).
struct ProjectiveSystem {
    PreProjectiveSystem base;
    OpMatrix sigma_bar;

    size_t arity() const { return base.arity(); }
    const AlgebraPtr& algebra() const { return base.algebra(); }
};

/// Multi-derivation whose sigma is part of a projective system, together
/// with sigma_hat inverting sigma_bar^T on both sides. Free when pi = I.
struct ProjectivelyFreeDerivation {
    MultiDerivation derivation;
    ProjectiveSystem system;
    OpMatrix sigma_hat;

    size_t arity() const { return derivation.arity(); }
    const AlgebraPtr& algebra() const { return derivation.algebra(); }
    const AlgMatrix& pi() const { return system.base.pi; }
    bool is_free() const { return system.base.pi.is_identity(); }
};

/// Twisted-Leibniz check on all basis pairs (within the window when graded).
Report check_multiderivation(const MultiDerivation& d, size_t max_violations = 10);

/// The three defining equations plus idempotency of pi.
Report check_preprojective(const PreProjectiveSystem& s, size_t max_violations = 10);

/// The seven identities every valid pre-projective system must satisfy.
/// Empty for any input passing check_preprojective; a nonempty report there
/// indicates an implementation bug rather than bad data.
Report derived_identities(const PreProjectiveSystem& s, size_t max_violations = 10);

/// sigma_bar multiplicativity and both bullet equations.
Report check_projective(const ProjectiveSystem& s, size_t max_violations = 10);

/// Both sigma_hat bullet equations plus the free-case normalizations.
Report check_projectively_free(const ProjectivelyFreeDerivation& p, size_t max_violations = 10);

/// sigma_hat is an algebra map whenever the defining axioms hold; checked
/// separately so a failure can be classified as internal inconsistency.
Report hat_multiplicativity(const ProjectivelyFreeDerivation& p, size_t max_violations = 10);

struct TwistResult {
    MultiDerivation derivation;
    Report validation;  // re-run of check_multiderivation on the output
};

/// partial^pi: a -> partial(a) pi, paired with sigma_tilde.
TwistResult pi_twist(const MultiDerivation& d, const PreProjectiveSystem& s);

/// partial^sigma_i = sum_{j,k} sigma_bar_kj . partial^pi_j . sigma_hat_ki,
/// paired with sigma_hat.
TwistResult sigma_twist(const ProjectivelyFreeDerivation& p);
std::vector<LinOp> sigma_twisted_partials(const ProjectivelyFreeDerivation& p);

/// Diagnostic only: does the entrywise linear system for sigma_bar admit any
/// solution (multiplicativity not imposed)? Finite-dimensional algebras only.
struct BarSolvability {
    bool solvable = false;
    size_t solution_dim = 0;
};
BarSolvability sigma_bar_solvability(const PreProjectiveSystem& s);

}  // namespace homint
