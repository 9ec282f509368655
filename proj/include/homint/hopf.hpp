#pragma once

#include "homint/derivation.hpp"

namespace homint {

/// Hopf-algebra structure on a finite-dimensional algebra together with the
/// functional arrays (theta, chi) that generate a left-covariant calculus:
///   theta_ij(ab) = sum_k theta_ik(a) theta_kj(b),  theta_ij(1) = delta_ij,
///   chi_i(ab) = sum_j chi_j(a) theta_ji(b) + counit(a) chi_i(b).
struct HopfData {
    AlgebraPtr algebra;
    Matrix coproduct;             // d^2 x d, column x = Delta(e_x), row index (y,z) = y*d+z
    std::vector<Scalar> counit;   // row vector
    LinOp antipode;
    LinOp antipode_inv;
    std::vector<std::vector<std::vector<Scalar>>> theta;  // theta[i][j] = dual row
    std::vector<std::vector<Scalar>> chi;                 // chi[i] = dual row

    size_t dim() const { return algebra->dim(); }
    size_t n() const { return theta.size(); }

    /// Hit action f |> a = (id (x) f)(Delta(a)) as an operator on A.
    LinOp hit(const std::vector<Scalar>& functional) const;
    /// Functional precomposed with an operator: a -> f(g(a)).
    std::vector<Scalar> precompose(const std::vector<Scalar>& functional, const LinOp& g) const;

    Report check_hopf_axioms(size_t max_violations = 10) const;
    Report check_functional_axioms(size_t max_violations = 10) const;
};

/// Canonical Hopf structure on k-valued functions on a finite group.
HopfData group_hopf(const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels = {});

/// theta_ij = delta_ij ev_{g_i}, chi_i = ev_{g_i} - counit, for a subset of
/// distinct non-identity group elements.
void install_group_functionals(HopfData& h, const std::vector<size_t>& subset);

/// The free twisted multi-derivation generated by (theta, chi) hit actions.
ProjectivelyFreeDerivation covariant_derivation(const HopfData& h);

/// Residuals lambda((chi_i . S^-2) |> a) and lambda(S^2(partial_i(a))) over
/// all basis a; both vanish when lambda is a right integral.
Report right_integral_annihilation(const HopfData& h, const Functional& lambda,
                                   size_t max_violations = 10);

}  // namespace homint
