#include "homint/gallery.hpp"

#include <random>

namespace homint {

namespace {

const std::vector<std::vector<int>> kZ2Table{{0, 1}, {1, 0}};
const std::vector<std::vector<int>> kZ3Table{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

Instance from_hopf(std::string name, const std::vector<std::vector<int>>& table,
                   std::vector<std::string> labels, std::vector<size_t> subset) {
    HopfData h = group_hopf(table, std::move(labels));
    install_group_functionals(h, subset);
    ProjectivelyFreeDerivation pfd = covariant_derivation(h);
    Instance inst;
    inst.name = std::move(name);
    inst.algebra = h.algebra;
    inst.derivation = pfd.derivation;
    inst.pre = pfd.system.base;
    inst.sigma_bar = pfd.system.sigma_bar;
    inst.sigma_hat = pfd.sigma_hat;
    inst.hopf_subset = std::move(subset);
    Functional haar{h.algebra, {}};
    for (size_t i = 0; i < h.dim(); ++i) haar.set(i, h.algebra->field()->one());
    inst.reference = std::move(haar);
    return inst;
}

}  // namespace

std::optional<HopfData> Instance::hopf() const {
    if (!hopf_subset || algebra->group_table().empty()) return std::nullopt;
    HopfData h = group_hopf(algebra->group_table(), algebra->labels());
    install_group_functionals(h, *hopf_subset);
    return h;
}

MultiDerivation inner_calculus(const OpMatrix& sigma, const std::vector<Element>& delta) {
    const AlgebraPtr& A = sigma.algebra();
    size_t n = sigma.size();
    if (delta.size() != n) throw std::invalid_argument("delta length != sigma size");
    std::vector<LinOp> partial;
    partial.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        partial.push_back(LinOp::from_rule(A, [&](size_t b) {
            Element a = A->basis_element(b);
            Element acc = -(a * delta[i]);
            for (size_t j = 0; j < n; ++j) acc += delta[j] * sigma.at(j, i).apply(a);
            return acc;
        }));
    }
    return {std::move(partial), sigma};
}

Report inner_differential_check(const Instance& inst, const CalculusPtr& calc,
                                size_t max_violations) {
    Report report(max_violations);
    if (!inst.inner_delta) {
        report.add("inner.missing_delta", "instance carries no inner data");
        return report;
    }
    const AlgebraPtr& A = inst.algebra;
    size_t n = calc->rank();
    ModuleVec D(n, Element(A));
    for (size_t i = 0; i < n; ++i) {
        ModuleVec term = calc->left_action((*inst.inner_delta)[i], calc->omega(i));
        for (size_t j = 0; j < n; ++j) D[j] += term[j];
    }
    for (size_t pa : A->check_basis()) {
        Element a = A->basis_element(pa);
        ModuleVec lhs = calc->d(a);
        ModuleVec rhs = calc->right_action(D, a);
        ModuleVec aD = calc->left_action(a, D);
        for (size_t j = 0; j < n; ++j) rhs[j] -= aD[j];
        if (lhs != rhs)
            report.add("inner.commutator", "d(a) != Da - aD at a=" + A->label(pa));
    }
    return report;
}

Report inner_integral_identity(const Instance& inst, const IntegralMap& lambda,
                               size_t max_violations) {
    Report report(max_violations);
    if (!inst.inner_delta || !inst.projectively_free_data()) {
        report.add("inner.missing_data", "needs inner delta and sigma_bar / sigma_hat");
        return report;
    }
    const AlgebraPtr& A = inst.algebra;
    size_t n = inst.derivation.arity();
    const auto& delta = *inst.inner_delta;
    // bar_delta[k] = sum_l sigma_bar_kl(delta_l)
    std::vector<Element> bar_delta(n, Element(A));
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) bar_delta[k] += inst.sigma_bar->at(k, l).apply(delta[l]);
    for (size_t i = 0; i < n; ++i)
        for (size_t pa : A->check_basis()) {
            Element a = A->basis_element(pa);
            Element lhs(A), rhs(A);
            for (size_t k = 0; k < n; ++k)
                lhs += bar_delta[k] * inst.sigma_hat->at(k, i).apply(a);
            rhs = a * bar_delta[i];
            auto lv = lambda.eval(lhs), rv = lambda.eval(rhs);
            if (lv != rv)
                report.add("inner.integral_identity",
                           "i=" + std::to_string(i + 1) + " at a=" + A->label(pa));
        }
    return report;
}

Instance z2_haar() { return from_hopf("z2-haar", kZ2Table, {"e_e", "e_g"}, {1}); }

Instance z3_haar() { return from_hopf("z3-haar", kZ3Table, {"e_e", "e_g", "e_g2"}, {1, 2}); }

Instance inner_z2() {
    HopfData h = group_hopf(kZ2Table, {"e_e", "e_g"});
    const AlgebraPtr& A = h.algebra;
    // sigma = right translation by g (an algebra automorphism)
    std::vector<Scalar> ev_g(2, A->field()->zero());
    ev_g[1] = A->field()->one();
    LinOp rg = h.hit(ev_g);
    OpMatrix sigma(A, 1);
    sigma.at(0, 0) = rg;
    std::vector<Element> delta{A->basis_element(0)};
    Instance inst;
    inst.name = "inner-z2";
    inst.algebra = A;
    inst.derivation = inner_calculus(sigma, delta);
    inst.pre = {AlgMatrix::identity(A, 1), sigma, sigma};
    inst.sigma_bar = sigma;
    inst.sigma_hat = sigma;
    inst.inner_delta = std::move(delta);
    return inst;
}

Instance supercircle(int window) {
    if (window < 2) throw std::invalid_argument("supercircle needs window >= 2");
    AlgebraPtr A = Algebra::laurent_grassmann(window);
    const FieldPtr& F = A->field();
    LinOp d_x = LinOp::from_rule(A, [&](size_t i) {
        GradedKey k = A->key(i);
        return F->from(k.z_degree) * A->basis_element(i);
    });
    LinOp d_theta = LinOp::from_rule(A, [&](size_t i) {
        GradedKey k = A->key(i);
        if (!k.odd) return A->zero();
        return A->basis_element(*A->index_of_key({k.z_degree, false}));
    });
    LinOp parity = LinOp::from_rule(A, [&](size_t i) {
        Element b = A->basis_element(i);
        return A->key(i).odd ? -b : b;
    });
    OpMatrix sigma(A, 2);
    sigma.at(0, 0) = LinOp::identity(A);
    sigma.at(1, 1) = parity;
    Instance inst;
    inst.name = "supercircle:" + std::to_string(window);
    inst.algebra = A;
    inst.derivation = {{d_x, d_theta}, sigma};
    inst.pre = {AlgMatrix::identity(A, 2), sigma, sigma};
    inst.sigma_bar = sigma;
    inst.sigma_hat = sigma;
    Functional berezin{A, {}};
    berezin.set(*A->index_of_key({0, true}), F->one());
    inst.lambda_claimed = std::move(berezin);
    return inst;
}

Instance preproj_toy() {
    FieldPtr F = Field::rationals();
    Scalar z = F->zero(), o = F->one();
    // Q[t]/(t^2 - t): basis {1, t}
    std::vector<std::vector<std::vector<Scalar>>> c(
        2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>{z, z}));
    c[0][0] = {o, z};
    c[0][1] = {z, o};
    c[1][0] = {z, o};
    c[1][1] = {z, o};
    AlgebraPtr A = Algebra::finite(F, {"1", "t"}, c, {o, z});
    AlgMatrix pi(A, 2);
    pi.at(0, 0) = A->basis_element(1);  // diag(t, 0)
    OpMatrix sigma(A, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) sigma.at(i, j) = LinOp::right_mult(pi.at(i, j));
    std::vector<LinOp> partial(2, LinOp::zero(A));
    Instance inst;
    inst.name = "preproj-toy";
    inst.algebra = A;
    inst.derivation = {std::move(partial), sigma};
    inst.pre = {std::move(pi), sigma, sigma};
    return inst;
}

Instance random_commutative_api(unsigned seed, size_t n, size_t points) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<size_t> rank_dist(0, n);
    FieldPtr F = Field::rationals();
    std::vector<std::string> labels;
    for (size_t i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<std::vector<Scalar>>> c(
        points, std::vector<std::vector<Scalar>>(points, std::vector<Scalar>(points, F->zero())));
    for (size_t i = 0; i < points; ++i) c[i][i][i] = F->one();
    AlgebraPtr A = Algebra::finite(F, labels, c, std::vector<Scalar>(points, F->one()));

    // pointwise idempotent: at each point a random projector S diag(1..,0..) S^-1
    auto random_projector = [&]() {
        while (true) {
            Matrix s(F, n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t cc = 0; cc < n; ++cc) s.at(r, cc) = Scalar(entry(rng));
            if (rank(s) != n) continue;
            size_t k = rank_dist(rng);
            Matrix d(F, n, n);
            for (size_t r = 0; r < k; ++r) d.at(r, r) = F->one();
            // invert s by solving [s | I] -> [I | s^-1]
            Matrix aug(F, n, 2 * n);
            for (size_t r = 0; r < n; ++r) {
                for (size_t cc = 0; cc < n; ++cc) aug.at(r, cc) = s.at(r, cc);
                aug.at(r, n + r) = F->one();
            }
            auto rr = rref(aug);
            Matrix sinv(F, n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t cc = 0; cc < n; ++cc) sinv.at(r, cc) = rr.reduced.at(r, n + cc);
            return s * d * sinv;
        }
    };
    AlgMatrix pi(A, n);
    for (size_t t = 0; t < points; ++t) {
        Matrix proj = random_projector();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Element e = pi.at(i, j);
                e += proj.at(i, j) * A->basis_element(t);
                pi.at(i, j) = e;
            }
    }
    OpMatrix sigma(A, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sigma.at(i, j) = LinOp::right_mult(pi.at(i, j));
    std::vector<LinOp> partial(n, LinOp::zero(A));
    Instance inst;
    inst.name = "random-api-" + std::to_string(seed);
    inst.algebra = A;
    inst.derivation = {std::move(partial), sigma};
    inst.pre = {std::move(pi), sigma, sigma};
    return inst;
}

std::vector<std::string> gallery_names() {
    return {"z2-haar", "z3-haar", "inner-z2", "supercircle:<W>", "preproj-toy"};
}

Instance gallery_instance(const std::string& name) {
    if (name == "z2-haar") return z2_haar();
    if (name == "z3-haar") return z3_haar();
    if (name == "inner-z2") return inner_z2();
    if (name == "preproj-toy") return preproj_toy();
    if (name.rfind("supercircle:", 0) == 0) {
        int w = 0;
        try {
            w = std::stoi(name.substr(std::string("supercircle:").size()));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad supercircle window in '" + name + "'");
        }
        return supercircle(w);
    }
    throw std::invalid_argument("unknown gallery instance '" + name + "'");
}

}  // namespace homint
