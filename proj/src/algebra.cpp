#include "dgbv/algebra.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace dgbv {

std::vector<int> GradedBasis::parities() const {
    std::vector<int> p(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) p[i] = parity(i);
    return p;
}

std::vector<int> GradedBasis::degrees() const {
    std::vector<int> d(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) d[i] = degree(i);
    return d;
}

int GradedBasis::top_degree() const {
    int t = 0;
    for (const auto& e : elems) t = std::max(t, e.degree);
    return t;
}

std::optional<size_t> GradedBasis::find(const std::string& name) const {
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i].name == name) return i;
    return std::nullopt;
}

bool GradedBasis::is_bigraded() const {
    for (const auto& e : elems)
        if (!e.bidegree) return false;
    return !elems.empty();
}

Vec GradedAlgebra::wedge(const Vec& a, const Vec& b) const {
    assert(a.size() == dim() && b.size() == dim());
    Vec out(dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const Vec& t = table[i][j];
            for (size_t k = 0; k < dim(); ++k)
                if (!t[k].is_zero()) out[k] += c * t[k];
        }
    }
    return out;
}

namespace {

// Split v into its even and odd parts along the basis grading.
std::array<Vec, 2> parity_split(const GradedBasis& basis, const Vec& v) {
    std::array<Vec, 2> parts = {zero_vec(v.size()), zero_vec(v.size())};
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) parts[basis.parity(i)][i] = v[i];
    return parts;
}

}  // namespace

Vec DgbvAlgebra::brace(const Vec& a, const Vec& b) const {
    Vec out(dim());
    auto pa = parity_split(alg.basis, a);
    for (int p = 0; p < 2; ++p) {
        if (is_zero(pa[p])) continue;
        Vec term = alg.wedge(bvop.apply(pa[p]), b);
        Vec t2 = alg.wedge(pa[p], bvop.apply(b));
        if (p) t2 = Scalar{-1} * t2;
        Vec t3 = bvop.apply(alg.wedge(pa[p], b));
        out = out + term + t2 - t3;
    }
    return out;
}

Vec DgbvAlgebra::bracket(const Vec& a, const Vec& b) const {
    Vec out(dim());
    auto pa = parity_split(alg.basis, a);
    for (int p = 0; p < 2; ++p) {
        if (is_zero(pa[p])) continue;
        Vec br = brace(pa[p], b);
        if (p == 0) br = Scalar{-1} * br;  // (-1)^{|a|-1}
        out = out + br;
    }
    return out;
}

Matrix DgbvAlgebra::bracket_with(const Vec& a) const {
    Matrix m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) {
        Vec col = bracket(a, unit_vec(dim(), j));
        for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

Scalar DgbvAlgebra::integrate(const Vec& v) const {
    Scalar s;
    for (size_t i = 0; i < dim(); ++i) s += integral[i] * v[i];
    return s;
}

Scalar DgbvAlgebra::pairing(const Vec& a, const Vec& b) const {
    return integrate(alg.wedge(a, b));
}

bool AxiomReport::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

AxiomReport check_axioms(const DgbvAlgebra& A) {
    AxiomReport rep;
    const auto& alg = A.alg;
    const auto& basis = alg.basis;
    const size_t n = alg.dim();
    auto e = [&](size_t i) { return unit_vec(n, i); };
    auto nm = [&](size_t i) { return basis.elems[i].name; };

    auto run = [&](const std::string& name, auto&& body) {
        AxiomResult r{name, true, ""};
        body(r);
        rep.results.push_back(std::move(r));
    };

    run("unit", [&](AxiomResult& r) {
        for (size_t i = 0; i < n && r.pass; ++i)
            if (alg.wedge(alg.unit(), e(i)) != e(i) || alg.wedge(e(i), alg.unit()) != e(i)) {
                r.pass = false;
                r.witness = nm(i);
            }
    });

    run("degree", [&](AxiomResult& r) {
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n && r.pass; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (!alg.table[i][j][k].is_zero() &&
                        basis.degree(k) != basis.degree(i) + basis.degree(j)) {
                        r.pass = false;
                        r.witness = nm(i) + "^" + nm(j) + " hits " + nm(k);
                        break;
                    }
    });

    run("graded_commutativity", [&](AxiomResult& r) {
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n; ++j) {
                Scalar sign{(basis.parity(i) && basis.parity(j)) ? -1 : 1};
                if (alg.wedge(e(i), e(j)) != sign * alg.wedge(e(j), e(i))) {
                    r.pass = false;
                    r.witness = nm(i) + ", " + nm(j);
                    break;
                }
            }
    });

    run("associativity", [&](AxiomResult& r) {
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n && r.pass; ++j)
                for (size_t k = 0; k < n; ++k) {
                    Vec lhs = alg.wedge(alg.wedge(e(i), e(j)), e(k));
                    Vec rhs = alg.wedge(e(i), alg.wedge(e(j), e(k)));
                    if (lhs != rhs) {
                        r.pass = false;
                        r.witness = nm(i) + ", " + nm(j) + ", " + nm(k);
                        break;
                    }
                }
    });

    run("delta_derivation", [&](AxiomResult& r) {
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec lhs = A.delta.apply(alg.wedge(e(i), e(j)));
                Vec rhs = alg.wedge(A.delta.apply(e(i)), e(j));
                Vec t = alg.wedge(e(i), A.delta.apply(e(j)));
                if (basis.parity(i)) t = Scalar{-1} * t;
                rhs = rhs + t;
                if (lhs != rhs) {
                    r.pass = false;
                    r.witness = nm(i) + ", " + nm(j);
                    break;
                }
            }
    });

    run("delta_squared", [&](AxiomResult& r) {
        r.pass = (A.delta * A.delta).is_zero();
    });
    run("bv_squared", [&](AxiomResult& r) {
        r.pass = (A.bvop * A.bvop).is_zero();
    });
    run("anticommute", [&](AxiomResult& r) {
        r.pass = (A.delta * A.bvop + A.bvop * A.delta).is_zero();
    });

    run("bracket_symmetry", [&](AxiomResult& r) {
        // {l, m} = (-1)^{|l||m|} {m, l}
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n; ++j) {
                Scalar sign{(basis.parity(i) && basis.parity(j)) ? -1 : 1};
                if (A.brace(e(i), e(j)) != sign * A.brace(e(j), e(i))) {
                    r.pass = false;
                    r.witness = nm(i) + ", " + nm(j);
                    break;
                }
            }
    });

    run("bracket_jacobi", [&](AxiomResult& r) {
        auto sgn = [](int k) { return Scalar{k % 2 ? -1 : 1}; };
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n && r.pass; ++j)
                for (size_t k = 0; k < n; ++k) {
                    int pl = basis.parity(i), pm = basis.parity(j), pn = basis.parity(k);
                    Vec s = sgn(pl * (pn + 1)) * A.brace(e(i), A.brace(e(j), e(k)));
                    s = s + sgn(pm * (pl + 1)) * A.brace(e(j), A.brace(e(k), e(i)));
                    s = s + sgn(pn * (pm + 1)) * A.brace(e(k), A.brace(e(i), e(j)));
                    if (!is_zero(s)) {
                        r.pass = false;
                        r.witness = nm(i) + ", " + nm(j) + ", " + nm(k);
                        break;
                    }
                }
    });

    run("bracket_leibniz", [&](AxiomResult& r) {
        auto sgn = [](int k) { return Scalar{k % 2 ? -1 : 1}; };
        for (size_t i = 0; i < n && r.pass; ++i)
            for (size_t j = 0; j < n && r.pass; ++j)
                for (size_t k = 0; k < n; ++k) {
                    int pl = basis.parity(i), pm = basis.parity(j);
                    Vec lhs = A.brace(e(i), alg.wedge(e(j), e(k)));
                    Vec rhs = alg.wedge(A.brace(e(i), e(j)), e(k));
                    // {lambda, .} acts with parity |lambda| + 1 (Delta is odd)
                    rhs = rhs + sgn((pl + 1) * pm) * alg.wedge(e(j), A.brace(e(i), e(k)));
                    if (lhs != rhs) {
                        r.pass = false;
                        r.witness = nm(i) + ", " + nm(j) + ", " + nm(k);
                        break;
                    }
                }
    });

    return rep;
}

std::vector<Vec> cohomology_representatives(const GradedAlgebra&, const Matrix& delta) {
    Matrix ker = delta.kernel();
    Matrix img = delta.image();
    // pivots of [img | ker] past the img block give representatives that
    // complete Im delta to a basis of Ker delta
    Matrix stacked = Matrix::hstack(img, ker);
    Matrix reduced = stacked;
    auto pivots = reduced.rref();
    std::vector<Vec> reps;
    for (size_t p : pivots)
        if (p >= static_cast<size_t>(img.cols())) reps.push_back(stacked.column(p));
    return reps;
}

IntegralReport check_integral(const DgbvAlgebra& A) {
    IntegralReport rep;
    const size_t n = A.dim();
    auto e = [&](size_t i) { return unit_vec(n, i); };
    rep.is_integral = true;
    for (size_t i = 0; i < n && rep.is_integral; ++i)
        for (size_t j = 0; j < n; ++j) {
            int p = A.alg.basis.parity(i);
            Scalar lhs1 = A.pairing(A.delta.apply(e(i)), e(j));
            Scalar rhs1 = Scalar{(p + 1) % 2 ? -1 : 1} * A.integrate(
                              A.alg.wedge(e(i), A.delta.apply(e(j))));
            Scalar lhs2 = A.pairing(A.bvop.apply(e(i)), e(j));
            Scalar rhs2 = Scalar{p % 2 ? -1 : 1} * A.integrate(
                              A.alg.wedge(e(i), A.bvop.apply(e(j))));
            if (lhs1 != rhs1 || lhs2 != rhs2) {
                rep.is_integral = false;
                rep.witness = A.alg.basis.elems[i].name + ", " + A.alg.basis.elems[j].name;
                break;
            }
        }

    auto reps = cohomology_representatives(A.alg, A.delta);
    rep.h_dim = reps.size();
    Matrix pm(reps.size(), reps.size());
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b) pm.at(a, b) = A.pairing(reps[a], reps[b]);
    rep.pairing_rank = pm.rank();
    rep.is_nice = rep.is_integral && rep.pairing_rank == rep.h_dim;
    return rep;
}

std::optional<DgbvAlgebra> shift_dgbv(const DgbvAlgebra& A, const Vec& a, std::string* error) {
    auto set_err = [&](const std::string& msg) {
        if (error) *error = msg;
    };
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && A.alg.basis.parity(i)) {
            set_err("shift element is not even");
            return std::nullopt;
        }
    Vec mc = A.delta.apply(a) + Scalar{Rational{1, 2}} * A.bracket(a, a);
    if (!is_zero(mc)) {
        set_err("Maurer-Cartan residual nonzero");
        return std::nullopt;
    }
    if (!is_zero(A.bvop.apply(a))) {
        set_err("Delta a != 0");
        return std::nullopt;
    }
    DgbvAlgebra out = A;
    out.delta = A.delta + A.bracket_with(a);
    return out;
}

bool respects_shift(const Matrix& f, const GradedBasis& basis, int shift) {
    for (size_t r = 0; r < f.rows(); ++r)
        for (size_t c = 0; c < f.cols(); ++c)
            if (!f.at(r, c).is_zero() && basis.degree(r) != basis.degree(c) + shift)
                return false;
    return true;
}

}  // namespace dgbv
