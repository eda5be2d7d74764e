// Maurer-Cartan solving: normalization, residuals, obstructions, uniqueness,
// and the simultaneous bigraded solve.
#include "doctest.h"

#include "dgbv/models.hpp"
#include "helpers.hpp"

using namespace dgbv;
using dgbv::testing::load;

namespace {

std::vector<Vec> joint_classes(const LoadedModel& m) {
    CohomologyBasis coh = cohomology_basis(m.A, m.ip);
    std::vector<Vec> out;
    for (size_t j = 0; j < coh.vectors.size(); ++j)
        if (coh.in_joint_kernel[j]) out.push_back(coh.vectors[j]);
    return out;
}

MCSolution solve_ok(const LoadedModel& m, int order) {
    SolveOptions opt;
    opt.order = order;
    SolveResult res = solve(m.A, m.ip, joint_classes(m), opt);
    REQUIRE(std::holds_alternative<MCSolution>(res));
    return std::get<MCSolution>(res);
}

}  // namespace

TEST_CASE("initial term: variable parities match class parities") {
    LoadedModel m = load("torus4");
    auto [vars, g1] = initial_term(m.A, joint_classes(m));
    CHECK(vars.count() == 16);
    CHECK(g1.size() == 16);
    CohomologyBasis coh = cohomology_basis(m.A, m.ip);
    for (size_t j = 0; j < vars.count(); ++j) {
        int class_parity = -1;
        for (size_t i = 0; i < coh.vectors[j].size(); ++i)
            if (!coh.vectors[j][i].is_zero())
                class_parity = m.A.alg.basis.parity(i);
        CHECK(vars.parity[j] == class_parity);
    }
}

TEST_CASE("initial term rejects non-joint classes") {
    LoadedModel m = load("bv_obstruction");
    Vec t = unit_vec(m.A.dim(), *m.A.alg.basis.find("T"));  // Delta T = eta != 0
    CHECK_THROWS_AS(initial_term(m.A, {t}), std::invalid_argument);
}

TEST_CASE("single-class solve: Gamma = x0 * 1") {
    LoadedModel m = load("torus4");
    SolveOptions opt;
    opt.order = 3;
    SolveResult res = solve(m.A, m.ip, {m.A.alg.unit()}, opt);
    REQUIRE(std::holds_alternative<MCSolution>(res));
    const MCSolution& sol = std::get<MCSolution>(res);
    CHECK(sol.term(1).size() == 1);
    for (int n = 2; n <= 3; ++n) CHECK(sp_is_zero(sol.term(n)));
    CHECK(verify_mc(sol, m.A).valid());
}

TEST_CASE("torus solve: bracket vanishes, Gamma = Gamma_1") {
    LoadedModel m = load("torus4");
    MCSolution sol = solve_ok(m, 4);
    for (int n = 2; n <= 4; ++n) CHECK(sp_is_zero(sol.term(n)));
    McVerification v = verify_mc(sol, m.A);
    CHECK(v.valid());
    CHECK(sol.all_certified(true));
}

TEST_CASE("solver contract on every condition-passing model, N <= 4") {
    for (const char* name : {"torus4", "complex_torus_1", "complex_torus_2"}) {
        CAPTURE(name);
        LoadedModel m = load(name);
        for (int order = 1; order <= 4; ++order) {
            CAPTURE(order);
            MCSolution sol = solve_ok(m, order);
            McVerification v = verify_mc(sol, m.A);
            CHECK(v.residual_zero);
            CHECK(v.bv_closed);
            CHECK(v.x0_confined);
            CHECK(v.parity_ok);
            CHECK(sol.all_certified(true));
        }
    }
}

TEST_CASE("repeated runs are bit-identical") {
    LoadedModel m = load("complex_torus_2");
    MCSolution a = solve_ok(m, 4);
    MCSolution b = solve_ok(m, 4);
    REQUIRE(a.terms.size() == b.terms.size());
    for (size_t t = 0; t < a.terms.size(); ++t)
        CHECK(sp_is_zero(sp_sub(a.terms[t], b.terms[t])));
}

TEST_CASE("restriction functoriality: solve then kill variables = solve restricted") {
    LoadedModel m = load("torus4");
    std::vector<Vec> all = joint_classes(m);
    // restrict to the unit plus the first three degree-1 classes
    std::vector<Vec> sub(all.begin(), all.begin() + 4);
    SolveOptions opt;
    opt.order = 3;
    SolveResult r_sub = solve(m.A, m.ip, sub, opt);
    SolveResult r_all = solve(m.A, m.ip, all, opt);
    REQUIRE(std::holds_alternative<MCSolution>(r_sub));
    REQUIRE(std::holds_alternative<MCSolution>(r_all));
    const MCSolution& s_sub = std::get<MCSolution>(r_sub);
    const MCSolution& s_all = std::get<MCSolution>(r_all);
    // set x^j = 0 for j >= 4 in the full solution, then compare term by term
    for (int n = 1; n <= 3; ++n) {
        SuperPolynomial restricted;
        for (const auto& [mono, vec] : s_all.term(n)) {
            bool keep = true;
            for (size_t j = 4; j < mono.exp.size(); ++j)
                if (mono.exp[j] != 0) keep = false;
            if (!keep) continue;
            SuperMonomial small = SuperMonomial::one(4);
            for (size_t j = 0; j < 4; ++j) small.exp[j] = mono.exp[j];
            sp_add_term(restricted, small, vec);
        }
        CHECK(sp_is_zero(sp_sub(restricted, s_sub.term(n))));
    }
}

TEST_CASE("verify_mc flags a hand-perturbed solution") {
    LoadedModel m = load("heisenberg");
    MCSolution sol = solve_ok(m, 3);
    REQUIRE(verify_mc(sol, m.A).valid());
    // corrupt Gamma_2 with e3, which is not delta-closed (d e3 = -e1^e2)
    SuperMonomial mono = SuperMonomial::one(sol.vars.count());
    mono.exp[0] = 2;
    sp_add_term(sol.terms[1], mono, unit_vec(m.A.dim(), *m.A.alg.basis.find("e3")));
    McVerification v = verify_mc(sol, m.A);
    CHECK_FALSE(v.residual_zero);
    CHECK_FALSE(sp_is_zero(v.residual_by_order[1]));  // localized at order 2
    CHECK(sp_is_zero(v.residual_by_order[0]));
    CHECK_FALSE(v.x0_confined);  // the x0^2 term also violates normalization
}

TEST_CASE("obstruction: witness is reproducible and order-2 system unsolvable") {
    LoadedModel m = load("bv_obstruction");
    SolveOptions opt;
    opt.order = 4;
    SolveResult res = solve(m.A, m.ip, joint_classes(m), opt);
    REQUIRE(std::holds_alternative<ObstructionReport>(res));
    const ObstructionReport& ob = std::get<ObstructionReport>(res);
    CHECK(ob.order == 2);
    CHECK_FALSE(sp_is_zero(ob.harmonic_witness));

    // re-projecting the stored right-hand side reproduces the witness
    HodgeContext ctx = make_hodge(m.A.delta, m.ip);
    SuperPolynomial reproj;
    for (const auto& [mono, vec] : ob.rhs)
        sp_add_term(reproj, mono, ctx.harmonic.apply(vec));
    CHECK(sp_is_zero(sp_sub(reproj, ob.harmonic_witness)));

    // the witness is the expected 2 x1 x2 eta
    size_t eta = *m.A.alg.basis.find("eta");
    REQUIRE(joint_classes(m).size() == 4);  // 1, t1, t2, eta
    SuperMonomial x1x2 = SuperMonomial::one(4);
    x1x2.exp[1] = x1x2.exp[2] = 1;
    SuperPolynomial expected;
    sp_add_term(expected, x1x2, Scalar{2} * unit_vec(m.A.dim(), eta));
    CHECK(sp_is_zero(sp_sub(ob.harmonic_witness, expected)));

    // brute-force oracle: no Gamma_2 solves delta Gamma_2 = -1/2 rhs, because
    // delta = 0 while the rhs is nonzero
    CHECK(m.A.delta.is_zero());
    for (const auto& [mono, vec] : ob.rhs) {
        auto sol2 = m.A.delta.solve(Scalar{Rational{-1, 2}} * vec);
        bool rhs_zero = is_zero(vec);
        CHECK(sol2.has_value() == rhs_zero);
    }
}

TEST_CASE("simultaneous solve on complex tori: three equations, one real Gamma") {
    for (const char* name : {"complex_torus_1", "complex_torus_2"}) {
        CAPTURE(name);
        LoadedModel m = load(name);
        REQUIRE(m.bigraded.has_value());
        const BigradedModel& big = *m.bigraded;
        DgbvAlgebra dol = dolbeault_dgbv(big);
        DgbvAlgebra mir = mirror_dgbv(big);
        DgbvAlgebra der = derham_dgbv(big);
        std::vector<Vec> basis = real_harmonic_basis(big);
        SimultaneousReport rep =
            simultaneous_solve(dol, mir, der, big.conj_map, big.ip, basis, 3);
        CHECK(rep.ok);
        CHECK(rep.dolbeault_residual_zero);
        CHECK(rep.mirror_residual_zero);
        CHECK(rep.derham_residual_zero);
        CHECK(rep.real);
        // Gamma = Gamma_1 on tori: constant classes have vanishing brackets
        for (int n = 2; n <= 3; ++n) CHECK(sp_is_zero(rep.solution.term(n)));
        // order-2 homotopy formula Gamma_2 = (i/2) G_dbar dbar* partial*(G1 G1)
        SuperPolynomial g1g1 =
            sp_wedge(dol.alg, rep.solution.vars, rep.solution.term(1),
                     rep.solution.term(1));
        HodgeContext hdbar = make_hodge(big.dbar, big.ip);
        Matrix op = Scalar{Rational{0}, Rational{1, 2}} *
                    (hdbar.green * adjoint(big.dbar, big.ip) * adjoint(big.partial, big.ip));
        SuperPolynomial gamma2 = sp_apply_linear(op, 0, rep.solution.vars, g1g1);
        CHECK(sp_is_zero(sp_sub(gamma2, rep.solution.term(2))));
    }
}

TEST_CASE("simultaneous solve rejects a non-real basis") {
    LoadedModel m = load("complex_torus_1");
    const BigradedModel& big = *m.bigraded;
    std::vector<Vec> basis = real_harmonic_basis(big);
    basis[1] = Scalar::i() * basis[1];  // no longer conjugation-fixed
    SimultaneousReport rep =
        simultaneous_solve(dolbeault_dgbv(big), mirror_dgbv(big), derham_dgbv(big),
                           big.conj_map, big.ip, basis, 2);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.error.empty());
}
