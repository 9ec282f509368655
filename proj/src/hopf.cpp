#include "homint/hopf.hpp"

namespace homint {

LinOp HopfData::hit(const std::vector<Scalar>& functional) const {
    size_t d = dim();
    if (functional.size() != d) throw std::invalid_argument("functional length mismatch");
    return LinOp::from_rule(algebra, [&](size_t x) {
        Element out(algebra);
        for (size_t y = 0; y < d; ++y) {
            Scalar acc = algebra->field()->zero();
            for (size_t z = 0; z < d; ++z) {
                const Scalar& c = coproduct.at(y * d + z, x);
                if (!c.is_zero()) acc += c * functional[z];
            }
            if (!acc.is_zero()) out.add(y, acc);
        }
        return out;
    });
}

std::vector<Scalar> HopfData::precompose(const std::vector<Scalar>& functional,
                                         const LinOp& g) const {
    size_t d = dim();
    std::vector<Scalar> out(d, algebra->field()->zero());
    for (size_t x = 0; x < d; ++x) {
        const Element& img = g.basis_image(x);
        for (const auto& [y, c] : img.terms()) out[x] += functional[y] * c;
    }
    return out;
}

Report HopfData::check_hopf_axioms(size_t max_violations) const {
    Report report(max_violations);
    size_t d = dim();
    const FieldPtr& F = algebra->field();
    auto delta_of = [&](size_t x) {  // sparse coproduct column
        std::vector<std::pair<std::pair<size_t, size_t>, Scalar>> terms;
        for (size_t y = 0; y < d; ++y)
            for (size_t z = 0; z < d; ++z) {
                const Scalar& c = coproduct.at(y * d + z, x);
                if (!c.is_zero()) terms.push_back({{y, z}, c});
            }
        return terms;
    };
    for (size_t x = 0; x < d; ++x) {
        auto dx = delta_of(x);
        // coassociativity in k^(d^3)
        std::vector<Scalar> lhs(d * d * d, F->zero()), rhs(d * d * d, F->zero());
        for (const auto& [yz, c] : dx) {
            for (const auto& [uv, c2] : delta_of(yz.first))
                lhs[(uv.first * d + uv.second) * d + yz.second] += c * c2;
            for (const auto& [uv, c2] : delta_of(yz.second))
                rhs[(yz.first * d + uv.first) * d + uv.second] += c * c2;
        }
        if (lhs != rhs) report.add("hopf.coassociativity", "a=" + algebra->label(x));
        // counit on both legs
        Element left(algebra), right(algebra);
        for (const auto& [yz, c] : dx) {
            left += (c * counit[yz.first]) * algebra->basis_element(yz.second);
            right += (c * counit[yz.second]) * algebra->basis_element(yz.first);
        }
        if (left != algebra->basis_element(x) || right != algebra->basis_element(x))
            report.add("hopf.counit", "a=" + algebra->label(x));
        // antipode law on both legs
        Element anti_left(algebra), anti_right(algebra);
        for (const auto& [yz, c] : dx) {
            anti_left += c * (antipode.apply(algebra->basis_element(yz.first)) *
                              algebra->basis_element(yz.second));
            anti_right += c * (algebra->basis_element(yz.first) *
                               antipode.apply(algebra->basis_element(yz.second)));
        }
        Element target = counit[x] * algebra->unit();
        if (anti_left != target || anti_right != target)
            report.add("hopf.antipode", "a=" + algebra->label(x));
    }
    if (antipode.compose(antipode_inv) != LinOp::identity(algebra) ||
        antipode_inv.compose(antipode) != LinOp::identity(algebra))
        report.add("hopf.antipode_inverse", "S . S^-1 != id");
    return report;
}

Report HopfData::check_functional_axioms(size_t max_violations) const {
    Report report(max_violations);
    size_t d = dim();
    size_t nn = n();
    const FieldPtr& F = algebra->field();
    auto value = [&](const std::vector<Scalar>& f, const Element& e) {
        Scalar acc = F->zero();
        for (const auto& [y, c] : e.terms()) acc += f[y] * c;
        return acc;
    };
    Element one = algebra->unit();
    for (size_t i = 0; i < nn; ++i) {
        for (size_t j = 0; j < nn; ++j) {
            Scalar at_unit = value(theta[i][j], one);
            if (at_unit != (i == j ? F->one() : F->zero()))
                report.add("functional.theta_unit",
                           "theta(1) != delta at (i,j)=(" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
        }
    }
    for (size_t pa = 0; pa < d; ++pa)
        for (size_t pb = 0; pb < d; ++pb) {
            Element a = algebra->basis_element(pa), b = algebra->basis_element(pb);
            Element ab = a * b;
            for (size_t i = 0; i < nn; ++i) {
                for (size_t j = 0; j < nn; ++j) {
                    Scalar lhs = value(theta[i][j], ab);
                    Scalar rhs = F->zero();
                    for (size_t k = 0; k < nn; ++k)
                        rhs += value(theta[i][k], a) * value(theta[k][j], b);
                    if (lhs != rhs)
                        report.add("functional.theta_product",
                                   "(i,j)=(" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") at (a=" + algebra->label(pa) +
                                       ", b=" + algebra->label(pb) + ")");
                }
                Scalar lhs = value(chi[i], ab);
                Scalar rhs = value(counit, a) * value(chi[i], b);
                for (size_t j = 0; j < nn; ++j) rhs += value(chi[j], a) * value(theta[j][i], b);
                if (lhs != rhs)
                    report.add("functional.chi_twisted",
                               "i=" + std::to_string(i + 1) + " at (a=" + algebra->label(pa) +
                                   ", b=" + algebra->label(pb) + ")");
            }
        }
    return report;
}

HopfData group_hopf(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
    AlgebraPtr A = Algebra::functions_on_group(table, std::move(labels));
    size_t d = A->dim();
    const FieldPtr& F = A->field();
    size_t identity = *A->group_identity();
    HopfData h{A,
               Matrix(F, d * d, d),
               std::vector<Scalar>(d, F->zero()),
               LinOp::zero(A),
               LinOp::zero(A),
               {},
               {}};
    for (size_t y = 0; y < d; ++y)
        for (size_t z = 0; z < d; ++z) h.coproduct.at(y * d + z, table[y][z]) = F->one();
    h.counit[identity] = F->one();
    std::vector<size_t> inverse(d, 0);
    for (size_t x = 0; x < d; ++x)
        for (size_t y = 0; y < d; ++y)
            if (table[x][y] == static_cast<int>(identity)) inverse[x] = y;
    h.antipode = LinOp::from_rule(A, [&](size_t x) { return A->basis_element(inverse[x]); });
    h.antipode_inv = h.antipode;  // S(e_x) = e_{x^-1} is an involution
    return h;
}

void install_group_functionals(HopfData& h, const std::vector<size_t>& subset) {
    size_t d = h.dim();
    size_t identity = *h.algebra->group_identity();
    const FieldPtr& F = h.algebra->field();
    for (size_t g : subset) {
        if (g >= d) throw std::invalid_argument("subset index out of range");
        if (g == identity) throw std::invalid_argument("subset must avoid the identity");
    }
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (subset[i] == subset[j]) throw std::invalid_argument("subset must be distinct");
    size_t nn = subset.size();
    h.theta.assign(nn, std::vector<std::vector<Scalar>>(nn, std::vector<Scalar>(d, F->zero())));
    h.chi.assign(nn, std::vector<Scalar>(d, F->zero()));
    for (size_t i = 0; i < nn; ++i) {
        h.theta[i][i][subset[i]] = F->one();
        h.chi[i][subset[i]] = F->one();
        h.chi[i][identity] -= F->one();
    }
}

ProjectivelyFreeDerivation covariant_derivation(const HopfData& h) {
    size_t nn = h.n();
    const AlgebraPtr& A = h.algebra;
    LinOp s_inv = h.antipode_inv;
    LinOp s_inv2 = s_inv.compose(s_inv);
    std::vector<LinOp> partial;
    partial.reserve(nn);
    for (size_t i = 0; i < nn; ++i) partial.push_back(h.hit(h.chi[i]));
    OpMatrix sigma(A, nn), sigma_bar(A, nn), sigma_hat(A, nn);
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = 0; j < nn; ++j) {
            sigma.at(i, j) = h.hit(h.theta[i][j]);
            sigma_bar.at(i, j) = h.hit(h.precompose(h.theta[j][i], s_inv));
            sigma_hat.at(i, j) = h.hit(h.precompose(h.theta[i][j], s_inv2));
        }
    AlgMatrix pi = AlgMatrix::identity(A, nn);
    MultiDerivation deriv{std::move(partial), sigma};
    PreProjectiveSystem pre{std::move(pi), sigma, sigma};
    ProjectiveSystem proj{std::move(pre), std::move(sigma_bar)};
    return {std::move(deriv), std::move(proj), std::move(sigma_hat)};
}

Report right_integral_annihilation(const HopfData& h, const Functional& lambda,
                                   size_t max_violations) {
    Report report(max_violations);
    const AlgebraPtr& A = h.algebra;
    LinOp s2 = h.antipode.compose(h.antipode);
    LinOp s_inv2 = h.antipode_inv.compose(h.antipode_inv);
    for (size_t i = 0; i < h.n(); ++i) {
        LinOp twisted_hit = h.hit(h.precompose(h.chi[i], s_inv2));
        LinOp partial = h.hit(h.chi[i]);
        for (size_t x = 0; x < h.dim(); ++x) {
            Element a = A->basis_element(x);
            if (!lambda.eval(twisted_hit.apply(a)).is_zero())
                report.add("rint.twisted_hit", "lambda((chi_" + std::to_string(i + 1) +
                                                   " . S^-2) |> a) != 0 at a=" + A->label(x));
            if (!lambda.eval(s2.apply(partial.apply(a))).is_zero())
                report.add("rint.antipode_square",
                           "lambda(S^2(partial_" + std::to_string(i + 1) +
                               "(a))) != 0 at a=" + A->label(x));
        }
    }
    return report;
}

}  // namespace homint
