#include "dgbv/models.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

namespace dgbv {

LieAlgebraData LieAlgebraData::abelian(size_t dim) {
    LieAlgebraData g;
    g.dim = dim;
    g.f.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim)));
    return g;
}

void LieAlgebraData::set(size_t k, size_t i, size_t j, const Scalar& value) {
    f[k][i][j] = value;
    f[k][j][i] = -value;
}

Vec LieAlgebraData::bracket_basis(size_t i, size_t j) const {
    Vec v(dim);
    for (size_t k = 0; k < dim; ++k) v[k] = f[k][i][j];
    return v;
}

bool LieAlgebraData::jacobi_holds() const {
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k)
                for (size_t m = 0; m < dim; ++m) {
                    Scalar s;
                    for (size_t l = 0; l < dim; ++l) {
                        s += f[l][i][j] * f[m][l][k];
                        s += f[l][j][k] * f[m][l][i];
                        s += f[l][k][i] * f[m][l][j];
                    }
                    if (!s.is_zero()) return false;
                }
    return true;
}

namespace {

std::vector<unsigned> subset_order(size_t m) {
    std::vector<unsigned> masks;
    for (size_t d = 0; d <= m; ++d)
        for (unsigned s = 0; s < (1u << m); ++s)
            if (std::popcount(s) == static_cast<int>(d)) masks.push_back(s);
    return masks;
}

// Koszul sign of merging two disjoint generator sets (all generators odd):
// (-1)^{#{(a,b): a in s1, b in s2, a > b}}.
int merge_sign(unsigned s1, unsigned s2) {
    int inv = 0;
    for (unsigned a = 0; a < 32; ++a) {
        if (!(s1 >> a & 1)) continue;
        unsigned below = s2 & ((1u << a) - 1);
        inv += std::popcount(below);
    }
    return inv % 2 ? -1 : 1;
}

std::vector<size_t> mask_factors(unsigned mask) {
    std::vector<size_t> out;
    for (unsigned a = 0; a < 32; ++a)
        if (mask >> a & 1) out.push_back(a);
    return out;
}

}  // namespace

GradedAlgebra exterior_algebra(size_t generators, const std::string& gen_prefix) {
    GradedAlgebra alg;
    auto masks = subset_order(generators);
    std::vector<size_t> index_of(1u << generators);
    for (size_t i = 0; i < masks.size(); ++i) index_of[masks[i]] = i;

    for (unsigned s : masks) {
        BasisElement e;
        e.degree = std::popcount(s);
        if (s == 0) {
            e.name = "1";
        } else {
            for (size_t a : mask_factors(s)) {
                if (!e.name.empty()) e.name += "^";
                e.name += gen_prefix + std::to_string(a + 1);
            }
        }
        alg.basis.elems.push_back(std::move(e));
    }

    size_t n = masks.size();
    alg.table.assign(n, std::vector<Vec>(n, Vec(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            unsigned s1 = masks[i], s2 = masks[j];
            if (s1 & s2) continue;
            alg.table[i][j][index_of[s1 | s2]] = Scalar{merge_sign(s1, s2)};
        }
    return alg;
}

size_t exterior_index(size_t generators, unsigned mask) {
    auto masks = subset_order(generators);
    for (size_t i = 0; i < masks.size(); ++i)
        if (masks[i] == mask) return i;
    throw std::out_of_range("exterior_index: bad mask");
}

unsigned exterior_mask(const GradedAlgebra& alg, size_t index) {
    // reconstruct from the ordering convention
    size_t m = 0;
    while ((1u << m) < alg.dim()) ++m;
    auto masks = subset_order(m);
    return masks[index];
}

CeModel chevalley_eilenberg_model(const LieAlgebraData& g) {
    if (!g.jacobi_holds())
        throw std::invalid_argument("chevalley_eilenberg_model: Jacobi identity fails");
    CeModel model;
    model.lie = g;
    model.alg = exterior_algebra(g.dim);
    const size_t n = model.alg.dim();
    const size_t m = g.dim;

    // d on generators: d e^k = - sum_{i<j} f^k_ij e^i ^ e^j
    std::vector<Vec> dgen(m, Vec(n));
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                const Scalar& c = g.f[k][i][j];
                if (c.is_zero()) continue;
                size_t idx = exterior_index(m, (1u << i) | (1u << j));
                dgen[k][idx] -= c;
            }

    model.d = Matrix(n, n);
    for (size_t col = 0; col < n; ++col) {
        unsigned mask = exterior_mask(model.alg, col);
        auto factors = mask_factors(mask);
        Vec dv(n);
        for (size_t t = 0; t < factors.size(); ++t) {
            unsigned prefix = 0, suffix = 0;
            for (size_t u = 0; u < t; ++u) prefix |= 1u << factors[u];
            for (size_t u = t + 1; u < factors.size(); ++u) suffix |= 1u << factors[u];
            Vec term = model.alg.wedge(
                unit_vec(n, exterior_index(m, prefix)),
                model.alg.wedge(dgen[factors[t]], unit_vec(n, exterior_index(m, suffix))));
            if (t % 2) term = Scalar{-1} * term;
            dv = dv + term;
        }
        for (size_t r = 0; r < n; ++r) model.d.at(r, col) = dv[r];
    }
    if (!(model.d * model.d).is_zero())
        throw std::logic_error("chevalley_eilenberg_model: d^2 != 0");

    model.integral = Vec(n);
    model.integral[n - 1] = Scalar::one();  // top monomial is last in the ordering
    return model;
}

Vec bivector_element(size_t generators,
                     const std::vector<std::tuple<size_t, size_t, Scalar>>& terms) {
    size_t n = 1u << generators;
    auto masks = subset_order(generators);
    Vec w(masks.size());
    (void)n;
    for (const auto& [i, j, c] : terms) {
        if (i == j) continue;
        size_t a = i, b = j;
        Scalar coeff = c;
        if (a > b) {
            std::swap(a, b);
            coeff = -coeff;
        }
        w[exterior_index(generators, (1u << a) | (1u << b))] += coeff;
    }
    return w;
}

namespace {

// Interior product by a single generator, acting in the first slot.
Matrix interior_by_generator(const GradedAlgebra& forms, size_t gens, size_t gen) {
    const size_t n = forms.dim();
    Matrix m(n, n);
    for (size_t col = 0; col < n; ++col) {
        unsigned mask = exterior_mask(forms, col);
        if (!(mask >> gen & 1)) continue;
        auto factors = mask_factors(mask);
        size_t pos = 0;
        while (factors[pos] != gen) ++pos;
        int sign = pos % 2 ? -1 : 1;
        size_t row = exterior_index(gens, mask & ~(1u << gen));
        m.at(row, col) = Scalar{sign};
    }
    return m;
}

}  // namespace

Matrix contraction_operator(const GradedAlgebra& forms, const Vec& w) {
    size_t gens = 0;
    while ((size_t{1} << gens) < forms.dim()) ++gens;
    const size_t n = forms.dim();
    Matrix out(n, n);
    for (size_t idx = 0; idx < w.size(); ++idx) {
        if (w[idx].is_zero()) continue;
        unsigned mask = exterior_mask(forms, idx);
        auto factors = mask_factors(mask);
        if (factors.size() != 2)
            throw std::invalid_argument("contraction_operator: w must be a bivector");
        // iota_{e_i ^ e_j} = iota_{e_i} iota_{e_j}
        Matrix term = interior_by_generator(forms, gens, factors[0]) *
                      interior_by_generator(forms, gens, factors[1]);
        out = out + w[idx] * term;
    }
    return out;
}

namespace {

// Schouten bracket of polyvector monomials, recursive biderivation extension
// of the Lie bracket.
Vec schouten_mono(const LieAlgebraData& g, const GradedAlgebra& poly,
                  const std::vector<size_t>& a, const std::vector<size_t>& b) {
    const size_t n = poly.dim();
    auto gen_vec = [&](size_t gen) { return unit_vec(n, exterior_index(g.dim, 1u << gen)); };
    auto embed1 = [&](const Vec& lie_vec) {
        Vec v(n);
        for (size_t k = 0; k < g.dim; ++k) v[exterior_index(g.dim, 1u << k)] = lie_vec[k];
        return v;
    };
    if (a.size() == 1 && b.size() == 1) return embed1(g.bracket_basis(a[0], b[0]));
    if (a.size() > 1) {
        std::vector<size_t> rest(a.begin() + 1, a.end());
        Vec t1 = poly.wedge(gen_vec(a[0]), schouten_mono(g, poly, rest, b));
        Vec head = schouten_mono(g, poly, {a[0]}, b);
        Vec rest_mono(n);
        unsigned mask = 0;
        for (size_t u : rest) mask |= 1u << u;
        rest_mono[exterior_index(g.dim, mask)] = Scalar::one();
        Vec t2 = poly.wedge(head, rest_mono);
        if ((rest.size() * (b.size() - 1)) % 2) t2 = Scalar{-1} * t2;
        return t1 + t2;
    }
    // a is a single generator, b splits
    std::vector<size_t> rest(b.begin() + 1, b.end());
    Vec t1_head = schouten_mono(g, poly, a, {b[0]});
    Vec rest_mono(n);
    unsigned mask = 0;
    for (size_t u : rest) mask |= 1u << u;
    rest_mono[exterior_index(g.dim, mask)] = Scalar::one();
    Vec t1 = poly.wedge(t1_head, rest_mono);
    Vec t2 = poly.wedge(gen_vec(b[0]), schouten_mono(g, poly, a, rest));
    // sign (-1)^{(|a|-1)|b_0|} with |a| = 1: +1
    return t1 + t2;
}

}  // namespace

Vec schouten(const LieAlgebraData& g, const GradedAlgebra& poly, const Vec& a, const Vec& b) {
    const size_t n = poly.dim();
    Vec out(n);
    for (size_t ia = 0; ia < n; ++ia) {
        if (a[ia].is_zero()) continue;
        auto fa = mask_factors(exterior_mask(poly, ia));
        if (fa.empty()) continue;  // scalars bracket to zero
        for (size_t ib = 0; ib < n; ++ib) {
            if (b[ib].is_zero()) continue;
            auto fb = mask_factors(exterior_mask(poly, ib));
            if (fb.empty()) continue;
            out = out + (a[ia] * b[ib]) * schouten_mono(g, poly, fa, fb);
        }
    }
    return out;
}

KoszulResult koszul_delta(const GradedAlgebra& forms, const Matrix& d,
                          const LieAlgebraData& g, const Vec& w) {
    KoszulResult res;
    GradedAlgebra poly = exterior_algebra(g.dim);
    res.poisson = is_zero(schouten(g, poly, w, w));
    Matrix iota = contraction_operator(forms, w);
    res.bv = iota * d - d * iota;
    res.square_zero = (res.bv * res.bv).is_zero();
    res.anticommutes = (d * res.bv + res.bv * d).is_zero();
    return res;
}

PairCheck check_contraction_identity(const GradedAlgebra& forms, const Vec& integral,
                                     const Matrix& contraction) {
    PairCheck out;
    int top = forms.basis.top_degree();
    const size_t n = forms.dim();
    auto integrate = [&](const Vec& v) {
        Scalar s;
        for (size_t i = 0; i < n; ++i) s += integral[i] * v[i];
        return s;
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (forms.basis.degree(a) + forms.basis.degree(b) != top + 2) continue;
            Vec ea = unit_vec(n, a), eb = unit_vec(n, b);
            Scalar lhs = integrate(forms.wedge(contraction.apply(ea), eb));
            Scalar rhs = integrate(forms.wedge(ea, contraction.apply(eb)));
            if (lhs != rhs) {
                out.pass = false;
                out.witness = forms.basis.elems[a].name + ", " + forms.basis.elems[b].name;
                return out;
            }
        }
    return out;
}

PairCheck check_delta_integral(const GradedAlgebra& forms, const Vec& integral,
                               const Matrix& bv) {
    PairCheck out;
    const size_t n = forms.dim();
    auto integrate = [&](const Vec& v) {
        Scalar s;
        for (size_t i = 0; i < n; ++i) s += integral[i] * v[i];
        return s;
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Vec ea = unit_vec(n, a), eb = unit_vec(n, b);
            Scalar lhs = integrate(forms.wedge(bv.apply(ea), eb));
            Scalar rhs = integrate(forms.wedge(ea, bv.apply(eb)));
            if (forms.basis.parity(a)) rhs = -rhs;
            if (lhs != rhs) {
                out.pass = false;
                out.witness = forms.basis.elems[a].name + ", " + forms.basis.elems[b].name;
                return out;
            }
        }
    return out;
}

BigradedModel bigraded_kahler_model(size_t n) {
    if (n < 1) throw std::invalid_argument("bigraded_kahler_model: n >= 1 required");
    BigradedModel m;
    const size_t gens = 2 * n;
    m.alg = exterior_algebra(gens);
    const size_t dim = m.alg.dim();

    // rename generators and attach bidegrees
    for (size_t idx = 0; idx < dim; ++idx) {
        unsigned mask = exterior_mask(m.alg, idx);
        auto factors = mask_factors(mask);
        int p = 0, q = 0;
        std::string name;
        for (size_t f : factors) {
            if (!name.empty()) name += "^";
            if (f < n) {
                name += "dz" + std::to_string(f + 1);
                ++p;
            } else {
                name += "dzb" + std::to_string(f - n + 1);
                ++q;
            }
        }
        if (name.empty()) name = "1";
        m.alg.basis.elems[idx].name = name;
        m.alg.basis.elems[idx].bidegree = {p, q};
    }

    m.partial = Matrix(dim, dim);
    m.dbar = Matrix(dim, dim);
    m.ip = InnerProduct::standard(dim);

    m.omega = Vec(dim);
    for (size_t k = 0; k < n; ++k) {
        size_t idx = exterior_index(gens, (1u << k) | (1u << (n + k)));
        m.omega[idx] = Scalar{Rational{0}, Rational{1, 2}};  // (i/2) dz_k ^ dzb_k
    }

    // real structure: dz_k <-> dzb_k on generators, antilinear on coefficients
    m.conj_map = Matrix(dim, dim);
    for (size_t idx = 0; idx < dim; ++idx) {
        unsigned mask = exterior_mask(m.alg, idx);
        Vec acc = m.alg.unit();
        for (size_t f : mask_factors(mask)) {
            size_t swapped = f < n ? f + n : f - n;
            acc = m.alg.wedge(acc, unit_vec(dim, exterior_index(gens, 1u << swapped)));
        }
        for (size_t r = 0; r < dim; ++r) m.conj_map.at(r, idx) = acc[r];
    }

    m.integral = Vec(dim);
    m.integral[dim - 1] = Scalar::one();
    return m;
}

DgbvAlgebra dolbeault_dgbv(const BigradedModel& m) {
    DgbvAlgebra A;
    A.alg = m.alg;
    A.delta = m.dbar;
    A.bvop = Scalar{Rational{0}, Rational{-1}} * adjoint(m.partial, m.ip);
    A.integral = m.integral;
    A.delta_shift = 1;
    A.bvop_shift = -1;
    return A;
}

DgbvAlgebra mirror_dgbv(const BigradedModel& m) {
    DgbvAlgebra A;
    A.alg = m.alg;
    A.delta = m.partial;
    A.bvop = Scalar::i() * adjoint(m.dbar, m.ip);
    A.integral = m.integral;
    A.delta_shift = 1;
    A.bvop_shift = -1;
    return A;
}

DgbvAlgebra derham_dgbv(const BigradedModel& m) {
    DgbvAlgebra A;
    A.alg = m.alg;
    A.delta = m.partial + m.dbar;
    A.bvop = Scalar::i() * (adjoint(m.dbar, m.ip) - adjoint(m.partial, m.ip));
    A.integral = m.integral;
    A.delta_shift = 1;
    A.bvop_shift = -1;
    return A;
}

std::vector<Vec> real_harmonic_basis(const BigradedModel& m) {
    DgbvAlgebra der = derham_dgbv(m);
    CohomologyBasis coh = cohomology_basis(der, m.ip);
    if (!coh.unit_harmonic)
        throw std::logic_error("real_harmonic_basis: unit not harmonic");
    HodgeContext ctx = make_hodge(der.delta, m.ip);
    auto rho = [&](const Vec& v) { return m.conj_map.apply(conj(v)); };

    std::vector<Vec> candidates = {m.alg.unit()};
    for (const auto& v : coh.vectors) {
        Vec a = v + rho(v);
        Vec b = Scalar::i() * v - Scalar::i() * rho(v);
        for (Vec* c : {&a, &b}) {
            if (is_zero(*c)) continue;
            if (!is_zero(ctx.lap.apply(*c))) continue;  // conj not harmonic-compatible
            candidates.push_back(*c);
        }
    }
    Matrix cand = Matrix::from_columns(candidates);
    Matrix red = cand;
    auto pivots = red.rref();
    std::vector<Vec> basis;
    for (size_t p : pivots) basis.push_back(cand.column(p));
    if (basis.size() != coh.vectors.size())
        throw std::logic_error("real_harmonic_basis: realification did not span");
    return basis;
}

CompareReport compare_structures(const BigradedModel& m, int order) {
    CompareReport rep;
    KahlerReport kr = check_kahler_identities(m.alg, m.partial, m.dbar, m.ip, m.omega);
    rep.kahler_ok = kr.all_pass();
    rep.lambda_commutator_matches = kr.lambda_commutator_matches;
    if (!rep.kahler_ok) {
        rep.error = "Kaehler identities fail";
        return rep;
    }

    DgbvAlgebra dol = dolbeault_dgbv(m);
    DgbvAlgebra mir = mirror_dgbv(m);
    DgbvAlgebra der = derham_dgbv(m);
    std::vector<Vec> basis = real_harmonic_basis(m);

    rep.sim = simultaneous_solve(dol, mir, der, m.conj_map, m.ip, basis, order);
    if (!rep.sim.ok) {
        rep.error = rep.sim.error.empty() ? "simultaneous residuals nonzero" : rep.sim.error;
        return rep;
    }

    rep.dolbeault_data = product_tensor(rep.sim.solution, dol);
    rep.derham_data = product_tensor(rep.sim.solution, der);
    rep.metrics_equal = rep.dolbeault_data.metric == rep.derham_data.metric;
    rep.tensors_equal = rep.dolbeault_data.c == rep.derham_data.c;

    // x = 0: both tensors must reduce to the triple cup products of the
    // harmonic classes
    rep.ring_at_origin = true;
    size_t h = basis.size();
    SuperMonomial one = SuperMonomial::one(h);
    for (size_t i = 0; i < h && rep.ring_at_origin; ++i)
        for (size_t j = 0; j < h && rep.ring_at_origin; ++j)
            for (size_t k = 0; k < h; ++k) {
                Scalar cup = der.integrate(
                    m.alg.wedge(basis[i], m.alg.wedge(basis[j], basis[k])));
                for (const FrobeniusData* F : {&rep.dolbeault_data, &rep.derham_data}) {
                    auto it = F->at(i, j, k).find(one);
                    Scalar c0 = it == F->at(i, j, k).end() ? Scalar::zero() : it->second;
                    if (c0 != cup) {
                        rep.ring_at_origin = false;
                        break;
                    }
                }
            }
    return rep;
}

}  // namespace dgbv
