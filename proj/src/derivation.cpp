#include "homint/derivation.hpp"

namespace homint {

namespace {

std::string pair_at(const Algebra& alg, size_t a, size_t b) {
    return "(a=" + alg.label(a) + ", b=" + alg.label(b) + ")";
}

}  // namespace

Report check_multiderivation(const MultiDerivation& d, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = d.algebra();
    size_t n = d.arity();
    if (d.sigma.size() != n) {
        report.add("multiderivation.arity", "partial count != sigma size");
        return report;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t pa : A->check_basis()) {
            Element a = A->basis_element(pa);
            std::vector<Element> da;
            da.reserve(n);
            for (size_t j = 0; j < n; ++j) da.push_back(d.partial[j].apply(a));
            for (size_t pb : A->check_basis()) {
                Element b = A->basis_element(pb);
                Element lhs = d.partial[i].apply(a * b);
                Element rhs = a * d.partial[i].apply(b);
                for (size_t j = 0; j < n; ++j) rhs += da[j] * d.sigma.at(j, i).apply(b);
                if (lhs != rhs)
                    report.add("multiderivation.twisted_leibniz",
                               "i=" + std::to_string(i + 1) + " " + pair_at(*A, pa, pb));
            }
        }
    }
    return report;
}

Report check_preprojective(const PreProjectiveSystem& s, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = s.algebra();
    size_t n = s.arity();
    if (s.sigma.size() != n || s.sigma_tilde.size() != n) {
        report.add("preprojective.arity", "sigma / sigma_tilde / pi sizes differ");
        return report;
    }
    if (!s.pi.is_idempotent()) report.add("preprojective.idempotent", "pi * pi != pi");
    if (s.sigma_tilde.eval(A->unit()) != s.pi)
        report.add("preprojective.tilde_unit", "sigma_tilde(1) != pi");
    for (size_t pa : A->check_basis()) {
        Element a = A->basis_element(pa);
        AlgMatrix sig_a = s.sigma.eval(a);
        AlgMatrix til_a = s.sigma_tilde.eval(a);
        if (sig_a * s.pi != s.pi * til_a)
            report.add("preprojective.intertwine",
                       "sigma(a)pi != pi sigma_tilde(a) at a=" + A->label(pa));
        for (size_t pb : A->check_basis()) {
            Element b = A->basis_element(pb);
            AlgMatrix lhs = s.sigma_tilde.eval(b) * sig_a * s.pi;
            AlgMatrix rhs = s.sigma_tilde.eval(b * a) * s.pi;
            if (lhs != rhs)
                report.add("preprojective.tilde_product",
                           "sigma_tilde(b)sigma(a)pi != sigma_tilde(ba)pi at " +
                               pair_at(*A, pa, pb));
        }
    }
    return report;
}

Report derived_identities(const PreProjectiveSystem& s, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = s.algebra();
    const AlgMatrix& pi = s.pi;
    if (s.sigma.eval(A->unit()) * pi != pi)
        report.add("derived.sigma_unit", "sigma(1)pi != pi");
    for (size_t pa : A->check_basis()) {
        Element a = A->basis_element(pa);
        AlgMatrix sig = s.sigma.eval(a);
        AlgMatrix til = s.sigma_tilde.eval(a);
        AlgMatrix til_pi = til * pi;
        if (pi * sig * pi != til_pi)
            report.add("derived.pi_sigma_pi",
                       "pi sigma(a)pi != sigma_tilde(a)pi at a=" + A->label(pa));
        if (pi * til != til_pi || pi * til * pi != til_pi)
            report.add("derived.pi_tilde_commute",
                       "pi sigma_tilde(a) != sigma_tilde(a)pi at a=" + A->label(pa));
        if (sig * pi != til_pi)
            report.add("derived.sigma_pi_matches_tilde",
                       "sigma(a)pi != sigma_tilde(a)pi at a=" + A->label(pa));
        if (pi * sig * pi != sig * pi)
            report.add("derived.pi_sigma_collapse",
                       "pi sigma(a)pi != sigma(a)pi at a=" + A->label(pa));
        for (size_t pb : A->check_basis()) {
            Element b = A->basis_element(pb);
            AlgMatrix til_b = s.sigma_tilde.eval(b);
            AlgMatrix ba_pi = s.sigma_tilde.eval(b * a) * pi;
            if (til_b * til * pi != ba_pi || ba_pi != til_b * pi * til)
                report.add("derived.tilde_product",
                           "sigma_tilde(b)sigma_tilde(a)pi chain fails at " + pair_at(*A, pa, pb));
            if (s.sigma.eval(b) * sig * pi != s.sigma.eval(b * a) * pi)
                report.add("derived.sigma_product",
                           "sigma(b)sigma(a)pi != sigma(ba)pi at " + pair_at(*A, pa, pb));
        }
    }
    return report;
}

namespace {

Report check_algebra_map(const OpMatrix& m, const std::string& who, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = m.algebra();
    if (m.eval(A->unit()) != AlgMatrix::identity(A, m.size()))
        report.add(who + ".unit", who + "(1) != I");
    for (size_t pa : A->check_basis()) {
        Element a = A->basis_element(pa);
        AlgMatrix ma = m.eval(a);
        for (size_t pb : A->check_basis()) {
            Element b = A->basis_element(pb);
            if (m.eval(a * b) != ma * m.eval(b))
                report.add(who + ".multiplicative", who + "(ab) != " + who + "(a)" + who +
                                                        "(b) at " + pair_at(*A, pa, pb));
        }
    }
    return report;
}

}  // namespace

Report check_projective(const ProjectiveSystem& s, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = s.algebra();
    size_t n = s.arity();
    if (s.sigma_bar.size() != n) {
        report.add("projective.arity", "sigma_bar size mismatch");
        return report;
    }
    report.merge(check_algebra_map(s.sigma_bar, "projective.sigma_bar", max_violations));
    OpMatrix I = OpMatrix::identity(A, n);
    if (!s.sigma_bar.bullet(s.base.sigma_tilde.transpose()).equal_on_check_basis(I))
        report.add("projective.bar_tilde_inverse", "sigma_bar . sigma_tilde^T != I");
    if (!s.base.sigma.transpose().bullet(s.sigma_bar).equal_on_check_basis(
            OpMatrix::embed(s.base.pi)))
        report.add("projective.sigma_bar_projector", "sigma^T . sigma_bar != pi");
    return report;
}

Report check_projectively_free(const ProjectivelyFreeDerivation& p, size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = p.algebra();
    size_t n = p.arity();
    if (p.sigma_hat.size() != n) {
        report.add("projfree.arity", "sigma_hat size mismatch");
        return report;
    }
    OpMatrix I = OpMatrix::identity(A, n);
    OpMatrix bar_t = p.system.sigma_bar.transpose();
    if (!p.sigma_hat.bullet(bar_t).equal_on_check_basis(I))
        report.add("projfree.hat_bar_inverse", "sigma_hat . sigma_bar^T != I");
    if (!bar_t.bullet(p.sigma_hat).equal_on_check_basis(I))
        report.add("projfree.bar_hat_inverse", "sigma_bar^T . sigma_hat != I");
    if (p.is_free() && !p.system.base.sigma.equal_on_check_basis(p.system.base.sigma_tilde))
        report.add("projfree.free_normalization", "pi = I but sigma_tilde != sigma");
    return report;
}

Report hat_multiplicativity(const ProjectivelyFreeDerivation& p, size_t max_violations) {
    return check_algebra_map(p.sigma_hat, "projfree.sigma_hat", max_violations);
}

TwistResult pi_twist(const MultiDerivation& d, const PreProjectiveSystem& s) {
    const AlgebraPtr& A = d.algebra();
    size_t n = d.arity();
    std::vector<LinOp> twisted;
    twisted.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        twisted.push_back(LinOp::from_rule(A, [&](size_t b) {
            Element acc(A);
            Element eb = A->basis_element(b);
            for (size_t j = 0; j < n; ++j) acc += d.partial[j].apply(eb) * s.pi.at(j, i);
            return acc;
        }));
    }
    MultiDerivation out{std::move(twisted), s.sigma_tilde};
    Report validation = check_multiderivation(out);
    return {std::move(out), std::move(validation)};
}

std::vector<LinOp> sigma_twisted_partials(const ProjectivelyFreeDerivation& p) {
    const AlgebraPtr& A = p.algebra();
    size_t n = p.arity();
    auto twisted_pi = pi_twist(p.derivation, p.system.base).derivation.partial;
    std::vector<LinOp> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        LinOp acc = LinOp::zero(A);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                acc = acc + p.system.sigma_bar.at(k, j)
                                .compose(twisted_pi[j])
                                .compose(p.sigma_hat.at(k, i));
        out.push_back(std::move(acc));
    }
    return out;
}

TwistResult sigma_twist(const ProjectivelyFreeDerivation& p) {
    MultiDerivation out{sigma_twisted_partials(p), p.sigma_hat};
    Report validation = check_multiderivation(out);
    return {std::move(out), std::move(validation)};
}

BarSolvability sigma_bar_solvability(const PreProjectiveSystem& s) {
    const AlgebraPtr& A = s.algebra();
    if (A->graded()) throw std::logic_error("sigma_bar_solvability needs a finite-dim algebra");
    size_t n = s.arity();
    size_t d = A->dim();
    const FieldPtr& F = A->field();
    // unknowns x[(i,k,r,c)] = matrix entry (r,c) of sigma_bar_ik
    auto unknown = [&](size_t i, size_t k, size_t r, size_t c) {
        return ((i * n + k) * d + r) * d + c;
    };
    size_t unknowns = n * n * d * d;
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    // sum_k sigma_bar_ik . sigma_tilde_jk = delta_ij id
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Matrix> tj;
            for (size_t k = 0; k < n; ++k) tj.push_back(s.sigma_tilde.at(j, k).to_matrix());
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) {
                    std::vector<Scalar> row(unknowns, F->zero());
                    for (size_t k = 0; k < n; ++k)
                        for (size_t m = 0; m < d; ++m) row[unknown(i, k, r, m)] += tj[k].at(m, c);
                    rows.push_back(std::move(row));
                    rhs.push_back(i == j && r == c ? F->one() : F->zero());
                }
        }
    // sum_k sigma_ki . sigma_bar_kj = right multiplication by pi_ij
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix target = LinOp::right_mult(s.pi.at(i, j)).to_matrix();
            std::vector<Matrix> sk;
            for (size_t k = 0; k < n; ++k) sk.push_back(s.sigma.at(k, i).to_matrix());
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) {
                    std::vector<Scalar> row(unknowns, F->zero());
                    for (size_t k = 0; k < n; ++k)
                        for (size_t m = 0; m < d; ++m) row[unknown(k, j, m, c)] += sk[k].at(r, m);
                    rows.push_back(std::move(row));
                    rhs.push_back(target.at(r, c));
                }
        }
    Matrix coeff = Matrix::from_rows(F, rows, unknowns);
    Matrix augmented(F, rows.size(), unknowns + 1);
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < unknowns; ++c) augmented.at(r, c) = coeff.at(r, c);
        augmented.at(r, unknowns) = rhs[r];
    }
    size_t rank_a = rank(coeff);
    size_t rank_aug = rank(augmented);
    BarSolvability out;
    out.solvable = rank_a == rank_aug;
    out.solution_dim = out.solvable ? unknowns - rank_a : 0;
    return out;
}

}  // namespace homint
