#pragma once

#include "homint/derivation.hpp"

namespace homint {

struct CalculusError : std::runtime_error {
    explicit CalculusError(const std::string& what) : std::runtime_error(what) {}
};

class Calculus;
using CalculusPtr = std::shared_ptr<const Calculus>;

/// Element of the one-form module M = A^n pi, stored as a row vector.
using ModuleVec = std::vector<Element>;

/// First order differential calculus on the projective module M = A^n pi:
/// generators omega_i = rows of pi, left duals eta_j = coordinate maps,
/// right action  m a = sum_{i,j} eta_i(m) sigma_tilde_ij(a) omega_j  and
/// differential  d a = sum_i partial_i(a) omega_i.
///
/// Construction verifies every module invariant (dual basis, relations,
/// unital associative right action, Leibniz rule, the pi-twisted
/// differential coinciding with d, and the sigma_bar identities when a
/// projective system is present); build() aborts on the first violation.
class Calculus {
public:
    static CalculusPtr build(AlgebraPtr algebra, PreProjectiveSystem system,
                             MultiDerivation derivation,
                             std::optional<OpMatrix> sigma_bar = std::nullopt,
                             std::optional<OpMatrix> sigma_hat = std::nullopt);
    /// Like build(), but collects violations instead of throwing.
    static std::pair<CalculusPtr, Report> build_checked(
        AlgebraPtr algebra, PreProjectiveSystem system, MultiDerivation derivation,
        std::optional<OpMatrix> sigma_bar = std::nullopt,
        std::optional<OpMatrix> sigma_hat = std::nullopt, size_t max_violations = 10);

    const AlgebraPtr& algebra() const { return algebra_; }
    const PreProjectiveSystem& system() const { return system_; }
    const MultiDerivation& derivation() const { return derivation_; }
    const std::optional<OpMatrix>& sigma_bar() const { return sigma_bar_; }
    const std::optional<OpMatrix>& sigma_hat() const { return sigma_hat_; }
    bool is_free() const { return system_.pi.is_identity(); }
    /// Projectively free packaging of the stored data; requires both twists.
    ProjectivelyFreeDerivation projectively_free() const;

    size_t rank() const { return n_; }
    const ModuleVec& omega(size_t i) const { return omega_[i]; }
    Element eta(size_t j, const ModuleVec& m) const { return m[j]; }
    ModuleVec right_action(const ModuleVec& m, const Element& a) const;
    ModuleVec left_action(const Element& a, const ModuleVec& m) const;
    Element xi(size_t i, const ModuleVec& m) const;  // needs sigma_bar
    ModuleVec d(const Element& a) const;
    bool module_contains(const ModuleVec& m) const;  // v pi = v

    /// Deterministic spanning set {standard row(slot, basis) * pi} over the
    /// check basis.
    const std::vector<ModuleVec>& spanning_rows() const { return spanning_; }

    // k-linear presentation of M (finite-dimensional algebras only)
    size_t module_dim() const;
    const std::vector<ModuleVec>& module_basis() const;
    std::vector<Scalar> module_coords(const ModuleVec& m) const;
    std::vector<Scalar> vectorize(const ModuleVec& m) const;  // k^(n*d)

private:
    Calculus() = default;
    Report verify(size_t max_violations) const;

    AlgebraPtr algebra_;
    PreProjectiveSystem system_;
    MultiDerivation derivation_;
    std::optional<OpMatrix> sigma_bar_, sigma_hat_;
    size_t n_ = 0;
    std::vector<ModuleVec> omega_;
    std::vector<ModuleVec> spanning_;
    std::vector<ModuleVec> kbasis_;                     // finite only
    std::optional<SubspacePresentation> presentation_;  // RREF of vectorized spanning rows
};

/// Right A-module map M -> A. Finite-dimensional algebras carry the full
/// coordinate matrix (columns indexed by the module k-basis); free modules
/// over graded algebras are determined by their omega-values through xi.
class HomElement {
public:
    static HomElement from_matrix(CalculusPtr calc, Matrix values);  // d x module_dim
    static HomElement from_omega_values(CalculusPtr calc, std::vector<Element> values);

    const CalculusPtr& calculus() const { return calc_; }
    Element eval(const ModuleVec& m) const;
    Element omega_value(size_t i) const;
    std::vector<Element> omega_values() const;
    const std::optional<Matrix>& matrix() const { return matrix_; }

    HomElement right_act(const Element& a) const;  // (f a)(m) = f(a m)
    HomElement operator+(const HomElement& o) const;
    HomElement operator-(const HomElement& o) const;
    friend HomElement operator*(const Scalar& c, HomElement f);
    bool operator==(const HomElement& o) const;

private:
    CalculusPtr calc_;
    std::optional<Matrix> matrix_;        // finite path
    std::vector<Element> omega_values_;   // graded free path
};

/// k-basis of all right A-module maps M -> A, computed as the kernel of the
/// right-linearity constraint system. Finite-dimensional algebras only.
std::vector<HomElement> hom_basis(const CalculusPtr& calc);

/// Window generators for the free graded case: one map per (slot, window
/// basis vector), sending omega_i to that basis vector and other omegas to 0.
std::vector<HomElement> hom_window_generators(const CalculusPtr& calc);

/// Right-linearity violations of a single hom element on spanning rows.
Report check_hom_right_linear(const HomElement& f, size_t max_violations = 10);

/// Rebuilds f from its omega-values: f = sum_{i,k} xi_i sigma_hat_ik(f(omega_k)).
HomElement reconstruct(const HomElement& f);

}  // namespace homint
