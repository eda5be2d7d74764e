// Scalars, exact linear algebra, and super-polynomial arithmetic.
#include "doctest.h"

#include "dgbv/matrix.hpp"
#include "dgbv/scalar.hpp"
#include "dgbv/super.hpp"

using namespace dgbv;

TEST_CASE("scalar field arithmetic and conjugation") {
    Scalar a{Rational{1, 3}, Rational{2, 5}};
    Scalar b{Rational{-2}, Rational{7, 4}};
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * b == b * a);
    // conjugation is an involutive field automorphism fixing rationals
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(Scalar{Rational{5, 7}}.conj() == Scalar{Rational{5, 7}});
    CHECK(Scalar::i() * Scalar::i() == Scalar{-1});
    CHECK(a.norm() == Rational{1, 9} + Rational{4, 25});
}

TEST_CASE("scalar literal round trip") {
    for (const char* lit : {"0", "1", "-1", "2/3", "-7/5", "i", "-i", "1/2*i",
                            "1/3+2/5*i", "-2-7/4*i", "3+i"}) {
        auto s = parse_scalar(lit);
        REQUIRE(s.has_value());
        auto back = parse_scalar(to_string(*s));
        REQUIRE(back.has_value());
        CHECK(*back == *s);
    }
    CHECK_FALSE(parse_scalar("1/0").has_value());
    CHECK_FALSE(parse_scalar("").has_value());
    CHECK_FALSE(parse_scalar("1.5").has_value());
    CHECK_FALSE(parse_scalar("x").has_value());
}

TEST_CASE("rref is canonical and idempotent") {
    Matrix m(3, 4);
    m.at(0, 0) = Scalar{2};
    m.at(0, 2) = Scalar{4};
    m.at(1, 1) = Scalar{1};
    m.at(1, 2) = Scalar{3};
    m.at(2, 0) = Scalar{1};
    m.at(2, 2) = Scalar{2};
    Matrix r = m;
    auto pivots = r.rref();
    CHECK(pivots.size() == 2);
    Matrix r2 = r;
    r2.rref();
    CHECK(r2 == r);
    CHECK(m.rank() == 2);
}

TEST_CASE("kernel, image, solve, inverse") {
    Matrix m(3, 3);
    m.at(0, 0) = Scalar{1};
    m.at(0, 1) = Scalar{2};
    m.at(1, 1) = Scalar{1};
    m.at(1, 2) = Scalar{-1};
    m.at(2, 0) = Scalar{1};
    m.at(2, 1) = Scalar{3};
    m.at(2, 2) = Scalar{-1};  // row2 = row0 + row1
    CHECK(m.rank() == 2);
    Matrix ker = m.kernel();
    CHECK(ker.cols() == 1);
    CHECK(is_zero(m.apply(ker.column(0))));
    Matrix img = m.image();
    CHECK(img.cols() == 2);
    Vec b = m.apply(Vec{Scalar{1}, Scalar{2}, Scalar{3}});
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
    CHECK_FALSE(m.solve(Vec{Scalar{0}, Scalar{0}, Scalar{1}}).has_value());

    Matrix inv_in(2, 2);
    inv_in.at(0, 0) = Scalar{1};
    inv_in.at(0, 1) = Scalar::i();
    inv_in.at(1, 1) = Scalar{Rational{1, 2}};
    CHECK(inv_in * inv_in.inverse() == Matrix::identity(2));
}

TEST_CASE("subspace canonical forms") {
    Matrix gen1(3, 2), gen2(3, 2);
    gen1.at(0, 0) = Scalar{1};
    gen1.at(1, 0) = Scalar{1};
    gen1.at(2, 1) = Scalar{1};
    gen2.at(0, 0) = Scalar{2};
    gen2.at(1, 0) = Scalar{2};
    gen2.at(2, 1) = Scalar{-5};  // same span, different generators
    Subspace s1(gen1), s2(gen2);
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(Vec{Scalar{3}, Scalar{3}, Scalar{7}}));
    CHECK_FALSE(s1.contains(Vec{Scalar{1}, Scalar{0}, Scalar{0}}));
    Subspace axis(Matrix::from_columns({Vec{Scalar{1}, Scalar{0}, Scalar{0}}}));
    CHECK((s1 + axis).dim() == 3);
    CHECK(intersect(s1, axis).dim() == 0);
    Subspace diag(Matrix::from_columns({Vec{Scalar{1}, Scalar{1}, Scalar{0}}}));
    CHECK(intersect(s1, diag) == diag);
}

TEST_CASE("koszul_sign examples") {
    // swapping two odd factors
    CHECK(koszul_sign({1, 1}, {1, 0}) == -1);
    // cyclic shift of three odd factors = two transpositions
    CHECK(koszul_sign({1, 1, 1}, {1, 2, 0}) == 1);
    // even factors move freely
    CHECK(koszul_sign({0, 1, 1}, {2, 1, 0}) == -1);
    CHECK(koszul_sign({0, 0, 1}, {2, 0, 1}) == 1);
    CHECK_THROWS(koszul_sign({1, 1}, {0, 0}));
    CHECK_THROWS(koszul_sign({1}, {0, 1}));
}

TEST_CASE("monomial multiplication") {
    VarSet vars;
    vars.parity = {1, 1, 0};
    auto x1 = SuperMonomial::var(3, 0);
    auto x2 = SuperMonomial::var(3, 1);
    auto [s12, m12] = monomial_multiply(vars, x1, x2);
    CHECK(s12 == 1);
    auto [s21, m21] = monomial_multiply(vars, x2, x1);
    CHECK(s21 == -1);
    CHECK(m12 == m21);
    // odd square vanishes
    CHECK(monomial_multiply(vars, x1, x1).first == 0);
    // even variables accumulate exponents with no sign
    auto x3 = SuperMonomial::var(3, 2);
    auto [s33, m33] = monomial_multiply(vars, x3, x3);
    CHECK(s33 == 1);
    CHECK(m33.exp[2] == 2);
}

TEST_CASE("supercontract is a left derivation") {
    VarSet vars;
    vars.parity = {1, 1, 0};
    SuperMonomial x12 = SuperMonomial::one(3);
    x12.exp[0] = x12.exp[1] = 1;
    // left-derivation convention: d_0(x0 x1) = x1, d_1(x0 x1) = -x0
    auto d0 = monomial_contract(vars, 0, x12);
    CHECK(d0.multiplicity == 1);
    CHECK(d0.sign == 1);
    CHECK(d0.reduced == SuperMonomial::var(3, 1));
    auto d1 = monomial_contract(vars, 1, x12);
    CHECK(d1.multiplicity == 1);
    CHECK(d1.sign == -1);
    CHECK(d1.reduced == SuperMonomial::var(3, 0));

    // derivation property over the scalar-polynomial product:
    // d_j(PQ) = (d_j P)Q + (-1)^{|x^j||P|} P (d_j Q), P homogeneous
    ScalarPoly P, Q;
    P.emplace(x12, Scalar{2});  // even monomial
    SuperMonomial q1 = SuperMonomial::var(3, 2);
    q1.exp[2] = 3;
    Q.emplace(q1, Scalar{5});
    SuperMonomial q2 = SuperMonomial::var(3, 1);
    q2.exp[2] = 1;
    Q.emplace(q2, Scalar{-1});
    for (size_t j = 0; j < 3; ++j) {
        ScalarPoly lhs = kp_contract(vars, j, kp_multiply(P, Q, vars));
        ScalarPoly rhs = kp_add(kp_multiply(kp_contract(vars, j, P), Q, vars),
                                kp_multiply(P, kp_contract(vars, j, Q), vars));
        CHECK(kp_is_zero(kp_add(lhs, kp_scale(Scalar{-1}, rhs))));
    }
}

TEST_CASE("scalar super polynomials supercommute") {
    VarSet vars;
    vars.parity = {1, 1, 0};
    ScalarPoly P, Q;
    SuperMonomial a = SuperMonomial::var(3, 0);
    SuperMonomial b = SuperMonomial::var(3, 1);
    SuperMonomial c = SuperMonomial::var(3, 2);
    P.emplace(a, Scalar{1});
    P.emplace(c, Scalar{3});
    Q.emplace(b, Scalar{2});
    Q.emplace(c, Scalar{-1});
    // P, Q with odd parts: x^j x^k = (-1)^{|x^j||x^k|} x^k x^j term by term
    ScalarPoly PQ = kp_multiply(P, Q, vars);
    ScalarPoly QP = kp_multiply(Q, P, vars);
    // compare monomial by monomial with the expected Koszul sign
    for (const auto& [m, coeff] : PQ) {
        auto it = QP.find(m);
        REQUIRE(it != QP.end());
        // x0*x1 flips sign; monomials involving the even x2 do not
        Scalar expect = (m.exp[0] == 1 && m.exp[1] == 1) ? -coeff : coeff;
        CHECK(it->second == expect);
    }
}
