#include "dgbv/mc.hpp"

#include <array>
#include <stdexcept>

namespace dgbv {

namespace {

// Split into total-parity-homogeneous pieces (index 0 = even, 1 = odd).
std::array<SuperPolynomial, 2> sp_parity_split(const SuperPolynomial& p, const VarSet& vars,
                                               const GradedBasis& basis) {
    std::array<SuperPolynomial, 2> parts;
    for (const auto& [m, v] : p) {
        int mp = m.parity(vars);
        Vec piece[2] = {zero_vec(v.size()), zero_vec(v.size())};
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) piece[(mp + basis.parity(i)) & 1][i] = v[i];
        for (int t = 0; t < 2; ++t)
            if (!is_zero(piece[t])) sp_add_term(parts[t], m, piece[t]);
    }
    return parts;
}

}  // namespace

SuperPolynomial sp_wedge(const GradedAlgebra& alg, const VarSet& vars,
                         const SuperPolynomial& p, const SuperPolynomial& q) {
    auto parities = alg.basis.parities();
    return sp_multiply(p, q, vars, parities,
                       [&](const Vec& a, const Vec& b) { return alg.wedge(a, b); });
}

SuperPolynomial sp_bracket(const DgbvAlgebra& A, const VarSet& vars,
                           const SuperPolynomial& p, const SuperPolynomial& q) {
    int bvp = A.bvop_parity();
    auto bv = [&](const SuperPolynomial& x) {
        return sp_apply_linear(A.bvop, bvp, vars, x);
    };
    SuperPolynomial out;
    auto pieces = sp_parity_split(p, vars, A.alg.basis);
    for (int par = 0; par < 2; ++par) {
        const SuperPolynomial& a = pieces[par];
        if (sp_is_zero(a)) continue;
        Scalar s{par ? -1 : 1};
        SuperPolynomial t1 = bv(sp_wedge(A.alg, vars, a, q));
        SuperPolynomial t2 = sp_wedge(A.alg, vars, bv(a), q);
        SuperPolynomial t3 = sp_scale(s, sp_wedge(A.alg, vars, a, bv(q)));
        out = sp_add(out, sp_scale(s, sp_sub(sp_sub(t1, t2), t3)));
    }
    return out;
}

SuperPolynomial MCSolution::truncated_sum() const {
    SuperPolynomial g;
    for (const auto& t : terms) g = sp_add(g, t);
    return g;
}

bool MCSolution::all_certified(bool analytic) const {
    for (const auto& c : certs) {
        if (!c.in_im_bv || !c.bv_closed || !c.even_total_parity || !c.no_x0) return false;
        if (analytic && !c.in_im_homotopy_bv) return false;
    }
    return true;
}

std::pair<VarSet, SuperPolynomial> initial_term(const DgbvAlgebra& A,
                                                const std::vector<Vec>& classes) {
    VarSet vars;
    SuperPolynomial g1;
    for (size_t j = 0; j < classes.size(); ++j) {
        const Vec& ej = classes[j];
        if (!is_zero(A.delta.apply(ej)) || !is_zero(A.bvop.apply(ej)))
            throw std::invalid_argument("initial_term: class " + std::to_string(j) +
                                        " is not in Ker delta cap Ker Delta");
        int parity = -1;
        for (size_t i = 0; i < ej.size(); ++i) {
            if (ej[i].is_zero()) continue;
            int p = A.alg.basis.parity(i);
            if (parity == -1) parity = p;
            else if (parity != p)
                throw std::invalid_argument("initial_term: class " + std::to_string(j) +
                                            " has mixed parity");
        }
        vars.parity.push_back(parity < 0 ? 0 : parity);
    }
    for (size_t j = 0; j < classes.size(); ++j)
        sp_add_term(g1, SuperMonomial::var(classes.size(), j), classes[j]);
    return {vars, g1};
}

SolveResult solve(const DgbvAlgebra& A, const InnerProduct& ip,
                  const std::vector<Vec>& classes, const SolveOptions& opt) {
    auto [vars, g1] = initial_term(A, classes);
    HodgeContext ctx = make_hodge(A.delta, ip);
    Matrix homotopy = ctx.op_adj * ctx.green;  // delta* G
    int hom_parity = A.delta_parity();

    Subspace im_bv(A.bvop.image());
    Subspace im_hom_bv(Matrix(ctx.op_adj * A.bvop).image());

    MCSolution sol;
    sol.vars = vars;
    sol.classes = classes;
    sol.order = opt.order;
    sol.terms.push_back(g1);

    auto basis_parities = A.alg.basis.parities();

    for (int n = 2; n <= opt.order; ++n) {
        SuperPolynomial rhs;
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            rhs = sp_add(rhs, sp_bracket(A, vars, sol.term(p), sol.term(q)));
        }
        rhs = sp_order_part(rhs, n);

        SuperPolynomial witness = sp_apply_linear(ctx.harmonic, 0, vars, rhs);
        if (!sp_is_zero(witness)) {
            ObstructionReport ob;
            ob.order = n;
            ob.harmonic_witness = witness;
            ob.rhs = rhs;
            ob.detail = "order-" + std::to_string(n) +
                        " right-hand side has a nonzero harmonic projection";
            return ob;
        }

        SuperPolynomial gn =
            sp_scale(Scalar{Rational{-1, 2}}, sp_apply_linear(homotopy, hom_parity, vars, rhs));

        // the candidate must actually solve delta Gamma_n = -1/2 rhs
        SuperPolynomial lhs = sp_apply_linear(A.delta, A.delta_parity(), vars, gn);
        SuperPolynomial target = sp_scale(Scalar{Rational{-1, 2}}, rhs);
        if (!sp_is_zero(sp_sub(lhs, target))) {
            ObstructionReport ob;
            ob.order = n;
            ob.harmonic_witness = witness;  // zero here
            ob.rhs = rhs;
            ob.detail = "order-" + std::to_string(n) +
                        " right-hand side is not delta-exact";
            return ob;
        }

        NormalizationCert cert;
        cert.in_im_bv = true;
        cert.in_im_homotopy_bv = true;
        cert.no_x0 = true;
        for (const auto& [m, v] : gn) {
            if (!im_bv.contains(v)) cert.in_im_bv = false;
            if (!im_hom_bv.contains(v)) cert.in_im_homotopy_bv = false;
            if (m.uses(0)) cert.no_x0 = false;
        }
        cert.bv_closed = sp_is_zero(sp_apply_linear(A.bvop, A.bvop_parity(), vars, gn));
        int par = sp_total_parity(gn, vars, basis_parities);
        cert.even_total_parity = (par == 0 || sp_is_zero(gn));

        sol.terms.push_back(std::move(gn));
        sol.certs.push_back(cert);
    }
    return sol;
}

McVerification verify_mc(const MCSolution& sol, const DgbvAlgebra& A) {
    McVerification out;
    const VarSet& vars = sol.vars;
    SuperPolynomial gamma = sol.truncated_sum();

    SuperPolynomial residual = sp_apply_linear(A.delta, A.delta_parity(), vars, gamma);
    for (size_t p = 1; p <= sol.terms.size(); ++p)
        for (size_t q = 1; p + q <= static_cast<size_t>(sol.order); ++q)
            residual = sp_add(residual,
                              sp_scale(Scalar{Rational{1, 2}},
                                       sp_bracket(A, vars, sol.term(static_cast<int>(p)),
                                                  sol.term(static_cast<int>(q)))));
    residual = sp_truncate(residual, sol.order);

    out.residual_zero = true;
    for (int n = 1; n <= sol.order; ++n) {
        SuperPolynomial part = sp_order_part(residual, n);
        if (!sp_is_zero(part)) out.residual_zero = false;
        out.residual_by_order.push_back(std::move(part));
    }

    out.bv_closed = sp_is_zero(sp_apply_linear(A.bvop, A.bvop_parity(), vars, gamma));

    out.x0_confined = true;
    for (size_t n = 2; n <= sol.terms.size(); ++n)
        for (const auto& [m, v] : sol.term(static_cast<int>(n)))
            if (m.uses(0)) out.x0_confined = false;

    out.parity_ok = true;
    auto parities = A.alg.basis.parities();
    for (const auto& t : sol.terms) {
        int p = sp_total_parity(t, vars, parities);
        if (!(p == 0 || sp_is_zero(t))) out.parity_ok = false;
    }
    return out;
}

SuperPolynomial sp_conjugate(const SuperPolynomial& p, const Matrix& conj_map) {
    SuperPolynomial out;
    for (const auto& [m, v] : p) sp_add_term(out, m, conj_map.apply(conj(v)));
    return out;
}

SimultaneousReport simultaneous_solve(const DgbvAlgebra& dolbeault,
                                      const DgbvAlgebra& mirror,
                                      const DgbvAlgebra& derham,
                                      const Matrix& conj_map, const InnerProduct& ip,
                                      const std::vector<Vec>& real_classes, int order) {
    SimultaneousReport rep;
    for (size_t j = 0; j < real_classes.size(); ++j) {
        if (conj_map.apply(conj(real_classes[j])) != real_classes[j]) {
            rep.error = "harmonic basis vector " + std::to_string(j) + " is not real";
            return rep;
        }
    }
    SolveOptions opt;
    opt.order = order;
    SolveResult res = solve(dolbeault, ip, real_classes, opt);
    if (auto* ob = std::get_if<ObstructionReport>(&res)) {
        rep.error = "obstruction at order " + std::to_string(ob->order);
        return rep;
    }
    rep.solution = std::get<MCSolution>(std::move(res));

    McVerification v_dol = verify_mc(rep.solution, dolbeault);
    McVerification v_mir = verify_mc(rep.solution, mirror);
    McVerification v_der = verify_mc(rep.solution, derham);
    rep.dolbeault_residual_zero = v_dol.residual_zero;
    rep.mirror_residual_zero = v_mir.residual_zero;
    rep.derham_residual_zero = v_der.residual_zero;

    SuperPolynomial gamma = rep.solution.truncated_sum();
    rep.real = sp_is_zero(sp_sub(sp_conjugate(gamma, conj_map), gamma));
    rep.ok = rep.dolbeault_residual_zero && rep.mirror_residual_zero &&
             rep.derham_residual_zero && rep.real;
    return rep;
}

}  // namespace dgbv
