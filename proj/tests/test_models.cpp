// Model builders: CE algebras, Schouten brackets, Koszul operators, bigraded
// Kaehler models, and the comparison harness.
#include "doctest.h"

#include "dgbv/models.hpp"
#include "helpers.hpp"

using namespace dgbv;
using dgbv::testing::load;

TEST_CASE("chevalley-eilenberg: abelian, Heisenberg, Jacobi failure") {
    SUBCASE("abelian: d = 0") {
        CeModel t = chevalley_eilenberg_model(LieAlgebraData::abelian(3));
        CHECK(t.d.is_zero());
    }
    SUBCASE("Heisenberg: d e3 = -e1^e2, d e1 = d e2 = 0") {
        LieAlgebraData g = LieAlgebraData::abelian(3);
        g.set(2, 0, 1, Scalar{1});  // [e1, e2] = e3
        CeModel h = chevalley_eilenberg_model(g);
        size_t n = h.alg.dim();
        Vec de3 = h.d.apply(unit_vec(n, exterior_index(3, 0b100)));
        Vec expect = Scalar{-1} * unit_vec(n, exterior_index(3, 0b011));
        CHECK(de3 == expect);
        CHECK(is_zero(h.d.apply(unit_vec(n, exterior_index(3, 0b001)))));
        CHECK(is_zero(h.d.apply(unit_vec(n, exterior_index(3, 0b010)))));
        CHECK((h.d * h.d).is_zero());
    }
    SUBCASE("non-Jacobi structure constants are rejected") {
        LieAlgebraData g = LieAlgebraData::abelian(3);
        g.set(2, 0, 1, Scalar{1});  // [e1,e2] = e3
        g.set(0, 0, 2, Scalar{1});  // [e1,e3] = e1
        // J(e1,e2,e3) = [e3,e3] + [[e2,e3],e1] + [[e3,e1],e2] = -[e1,e2] != 0
        CHECK_FALSE(g.jacobi_holds());
        CHECK_THROWS_AS(chevalley_eilenberg_model(g), std::invalid_argument);
    }
}

TEST_CASE("Kodaira-Thurston has b1 = 3") {
    LoadedModel m = load("kodaira_thurston");
    CohomologyBasis coh = cohomology_basis(m.A, m.ip);
    size_t b1 = 0;
    for (int d : coh.degree)
        if (d == 1) ++b1;
    CHECK(b1 == 3);
}

TEST_CASE("contraction operator") {
    GradedAlgebra forms = exterior_algebra(3);
    size_t n = forms.dim();
    Vec w = bivector_element(3, {{0, 1, Scalar{1}}});  // e1 ^ e2
    Matrix iota = contraction_operator(forms, w);
    // iota_{e1^e2}(e1^e2) = iota_{e1} iota_{e2} (e1^e2) = iota_{e1}(-e1) = -1
    Vec on_e12 = iota.apply(unit_vec(n, exterior_index(3, 0b011)));
    CHECK(on_e12 == Scalar{-1} * forms.unit());
    // degree < 2 contracts to zero
    for (size_t i = 0; i < n; ++i)
        if (forms.basis.degree(i) < 2)
            CHECK(is_zero(iota.apply(unit_vec(n, i))));
    // linear in w
    Vec w2 = bivector_element(3, {{0, 2, Scalar{3}}});
    Matrix sum = contraction_operator(forms, w + w2);
    CHECK(sum == iota + contraction_operator(forms, w2));
    // antisymmetry bookkeeping: (1, 0) with coefficient c equals (0, 1) with -c
    CHECK(bivector_element(3, {{1, 0, Scalar{1}}}) ==
          bivector_element(3, {{0, 1, Scalar{-1}}}));
}

TEST_CASE("schouten bracket: Poisson and non-Poisson bivectors") {
    LieAlgebraData heis = LieAlgebraData::abelian(3);
    heis.set(2, 0, 1, Scalar{1});  // [e1, e2] = e3
    GradedAlgebra poly = exterior_algebra(3);
    // w = e1 ^ e3 is Poisson for the Heisenberg algebra
    Vec w = bivector_element(3, {{0, 2, Scalar{1}}});
    CHECK(is_zero(schouten(heis, poly, w, w)));
    // w = e1 ^ e2 is not: [w, w] involves [e1, e2] = e3 wedged into degree 3
    Vec bad = bivector_element(3, {{0, 1, Scalar{1}}});
    CHECK_FALSE(is_zero(schouten(heis, poly, bad, bad)));

    // Kodaira-Thurston bivector e1^e3 + e2^e4 is Poisson
    LieAlgebraData kt = LieAlgebraData::abelian(4);
    kt.set(2, 0, 1, Scalar{1});
    GradedAlgebra poly4 = exterior_algebra(4);
    Vec wkt = bivector_element(4, {{0, 2, Scalar{1}}, {1, 3, Scalar{1}}});
    CHECK(is_zero(schouten(kt, poly4, wkt, wkt)));
}

TEST_CASE("koszul operator: identities certified, non-Poisson flagged") {
    LieAlgebraData heis = LieAlgebraData::abelian(3);
    heis.set(2, 0, 1, Scalar{1});
    CeModel ce = chevalley_eilenberg_model(heis);
    SUBCASE("admitted bivector") {
        Vec w = bivector_element(3, {{0, 2, Scalar{1}}});
        KoszulResult kz = koszul_delta(ce.alg, ce.d, heis, w);
        CHECK(kz.ok());
        // independent evaluation: Delta = iota_w d - d iota_w entry by entry
        Matrix iota = contraction_operator(ce.alg, w);
        CHECK(kz.bv == iota * ce.d - ce.d * iota);
    }
    SUBCASE("non-Poisson bivector") {
        Vec bad = bivector_element(3, {{0, 1, Scalar{1}}});
        KoszulResult kz = koszul_delta(ce.alg, ce.d, heis, bad);
        CHECK_FALSE(kz.poisson);
        CHECK_FALSE(kz.ok());
    }
}

TEST_CASE("contraction and Delta-integral identities on Poisson models") {
    for (const char* name : {"heisenberg", "kodaira_thurston"}) {
        CAPTURE(name);
        LoadedModel m = load(name);
        REQUIRE(m.bivector.has_value());
        Matrix iota = contraction_operator(m.A.alg, *m.bivector);
        PairCheck pc = check_contraction_identity(m.A.alg, m.A.integral, iota);
        CAPTURE(pc.witness);
        CHECK(pc.pass);
        PairCheck dc = check_delta_integral(m.A.alg, m.A.integral, m.A.bvop);
        CAPTURE(dc.witness);
        CHECK(dc.pass);
    }
}

TEST_CASE("bigraded model structure") {
    BigradedModel m = bigraded_kahler_model(2);
    size_t n = m.alg.dim();
    CHECK(n == 16);
    CHECK(m.alg.basis.is_bigraded());
    // conjugation is an antilinear involution swapping (p,q) <-> (q,p)
    auto rho = [&](const Vec& v) { return m.conj_map.apply(conj(v)); };
    for (size_t i = 0; i < n; ++i) {
        Vec v = unit_vec(n, i);
        CHECK(rho(rho(v)) == v);
        auto [p, q] = *m.alg.basis.elems[i].bidegree;
        Vec rv = rho(v);
        for (size_t j = 0; j < n; ++j)
            if (!rv[j].is_zero()) {
                auto [rp, rq] = *m.alg.basis.elems[j].bidegree;
                CHECK(rp == q);
                CHECK(rq == p);
            }
        // and it scales antilinearly
        CHECK(rho(Scalar::i() * v) == -Scalar::i() * rho(v));
    }
    // omega is real and of bidegree (1,1)
    CHECK(rho(m.omega) == m.omega);
}

TEST_CASE("the three dGBV structures share the algebra and integral") {
    BigradedModel m = bigraded_kahler_model(1);
    DgbvAlgebra dol = dolbeault_dgbv(m);
    DgbvAlgebra mir = mirror_dgbv(m);
    DgbvAlgebra der = derham_dgbv(m);
    CHECK(der.delta == dol.delta + mir.delta);
    // de Rham Delta = i(dbar* - partial*) = mirror Delta + dolbeault Delta
    CHECK(der.bvop == dol.bvop + mir.bvop);
    for (const DgbvAlgebra* A : {&dol, &mir, &der}) {
        AxiomReport rep = check_axioms(*A);
        CHECK(rep.all_pass());
        CHECK(check_integral(*A).is_nice);
    }
}

TEST_CASE("real harmonic basis: real, harmonic, degree-ordered, unit first") {
    for (size_t dim : {1u, 2u}) {
        CAPTURE(dim);
        BigradedModel m = bigraded_kahler_model(dim);
        std::vector<Vec> basis = real_harmonic_basis(m);
        CHECK(basis.size() == m.alg.dim());  // torus: everything harmonic
        CHECK(basis[0] == m.alg.unit());
        auto rho = [&](const Vec& v) { return m.conj_map.apply(conj(v)); };
        int last_degree = 0;
        for (const Vec& v : basis) {
            CHECK(rho(v) == v);
            int deg = -1;
            for (size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) {
                    if (deg < 0) deg = m.alg.basis.degree(i);
                    CHECK(deg == m.alg.basis.degree(i));  // homogeneous
                }
            CHECK(deg >= last_degree);  // ordered by degree
            last_degree = deg;
        }
    }
}

TEST_CASE("compare_structures identifies the two Frobenius structures") {
    for (const char* name : {"complex_torus_1", "complex_torus_2"}) {
        CAPTURE(name);
        LoadedModel m = load(name);
        REQUIRE(m.bigraded.has_value());
        CompareReport rep = compare_structures(*m.bigraded, 3);
        CHECK(rep.kahler_ok);
        CHECK(rep.lambda_commutator_matches);
        CHECK(rep.sim.ok);
        CHECK(rep.metrics_equal);
        CHECK(rep.tensors_equal);
        CHECK(rep.ring_at_origin);
        CHECK(rep.identified());
    }
}
