#include "dgbv/super.hpp"

#include <numeric>
#include <stdexcept>

namespace dgbv {

int SuperMonomial::degree() const {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

int SuperMonomial::parity(const VarSet& vars) const {
    int p = 0;
    for (size_t j = 0; j < exp.size(); ++j) p += exp[j] * vars.parity[j];
    return p & 1;
}

bool operator<(const SuperMonomial& a, const SuperMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
}

int koszul_sign(const std::vector<int>& parities, const std::vector<size_t>& perm) {
    if (parities.size() != perm.size())
        throw std::invalid_argument("koszul_sign: length mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (size_t p : perm) {
        if (p >= perm.size() || seen[p])
            throw std::invalid_argument("koszul_sign: not a permutation");
        seen[p] = true;
    }
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && (parities[i] & 1) && (parities[j] & 1)) ++inversions;
    return inversions % 2 ? -1 : 1;
}

std::pair<int, SuperMonomial> monomial_multiply(const VarSet& vars, const SuperMonomial& m1,
                                                const SuperMonomial& m2) {
    size_t n = vars.count();
    SuperMonomial prod = SuperMonomial::one(n);
    // sign: each odd factor of m1 at index a passes over the odd factors of m2
    // at indices b < a when merging into increasing order
    int crossings = 0;
    int odd2_prefix = 0;  // running count of odd m2 factors with index < a
    for (size_t a = 0; a < n; ++a) {
        if (vars.parity[a] & 1) {
            if (m1.exp[a] && m2.exp[a]) return {0, prod};  // odd square
            if (m1.exp[a]) crossings += odd2_prefix;
            if (m2.exp[a]) ++odd2_prefix;
        }
        prod.exp[a] = m1.exp[a] + m2.exp[a];
    }
    return {crossings % 2 ? -1 : 1, prod};
}

MonoDeriv monomial_contract(const VarSet& vars, size_t j, const SuperMonomial& m) {
    MonoDeriv d;
    if (m.exp[j] == 0) return d;
    d.reduced = m;
    d.reduced.exp[j] -= 1;
    d.multiplicity = m.exp[j];
    // left derivation: pass over the odd variables preceding x^j
    int passed = 0;
    for (size_t b = 0; b < j; ++b)
        if ((vars.parity[b] & 1) && m.exp[b]) ++passed;
    d.sign = passed % 2 ? -1 : 1;
    return d;
}

void sp_add_term(SuperPolynomial& p, const SuperMonomial& m, const Vec& v) {
    if (is_zero(v)) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, v);
    } else {
        it->second = it->second + v;
        if (is_zero(it->second)) p.erase(it);
    }
}

SuperPolynomial sp_add(const SuperPolynomial& p, const SuperPolynomial& q) {
    SuperPolynomial out = p;
    for (const auto& [m, v] : q) sp_add_term(out, m, v);
    return out;
}

SuperPolynomial sp_sub(const SuperPolynomial& p, const SuperPolynomial& q) {
    SuperPolynomial out = p;
    for (const auto& [m, v] : q) sp_add_term(out, m, Scalar{-1} * v);
    return out;
}

SuperPolynomial sp_scale(const Scalar& s, const SuperPolynomial& p) {
    SuperPolynomial out;
    if (s.is_zero()) return out;
    for (const auto& [m, v] : p) out.emplace(m, s * v);
    return out;
}

bool sp_is_zero(const SuperPolynomial& p) {
    for (const auto& [m, v] : p)
        if (!is_zero(v)) return false;
    return true;
}

SuperPolynomial sp_order_part(const SuperPolynomial& p, int n) {
    SuperPolynomial out;
    for (const auto& [m, v] : p)
        if (m.degree() == n) out.emplace(m, v);
    return out;
}

SuperPolynomial sp_truncate(const SuperPolynomial& p, int max_order) {
    SuperPolynomial out;
    for (const auto& [m, v] : p)
        if (m.degree() <= max_order) out.emplace(m, v);
    return out;
}

int sp_max_order(const SuperPolynomial& p) {
    int mx = 0;
    for (const auto& [m, v] : p) mx = std::max(mx, m.degree());
    return mx;
}

int sp_total_parity(const SuperPolynomial& p, const VarSet& vars,
                    const std::vector<int>& basis_parity) {
    int total = -1;
    for (const auto& [m, v] : p) {
        int mp = m.parity(vars);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            int t = (mp + basis_parity[i]) & 1;
            if (total == -1) total = t;
            else if (total != t) return -1;
        }
    }
    return total;
}

SuperPolynomial sp_contract(const VarSet& vars, size_t j, const SuperPolynomial& p) {
    SuperPolynomial out;
    for (const auto& [m, v] : p) {
        MonoDeriv d = monomial_contract(vars, j, m);
        if (d.multiplicity == 0) continue;
        sp_add_term(out, d.reduced, Scalar{d.sign * d.multiplicity} * v);
    }
    return out;
}

ScalarPoly kp_contract(const VarSet& vars, size_t j, const ScalarPoly& p) {
    ScalarPoly out;
    for (const auto& [m, s] : p) {
        MonoDeriv d = monomial_contract(vars, j, m);
        if (d.multiplicity == 0) continue;
        Scalar add = Scalar{d.sign * d.multiplicity} * s;
        auto it = out.find(d.reduced);
        if (it == out.end()) out.emplace(d.reduced, add);
        else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

SuperPolynomial sp_apply_linear(const Matrix& f, int f_parity, const VarSet& vars,
                                const SuperPolynomial& p) {
    SuperPolynomial out;
    for (const auto& [m, v] : p) {
        Vec fv = f.apply(v);
        if ((f_parity & 1) && (m.parity(vars) & 1)) fv = Scalar{-1} * fv;
        sp_add_term(out, m, fv);
    }
    return out;
}

ScalarPoly sp_pair_down(const SuperPolynomial& p, const Vec& functional) {
    ScalarPoly out;
    for (const auto& [m, v] : p) {
        Scalar s;
        for (size_t i = 0; i < v.size(); ++i) s += functional[i] * v[i];
        if (!s.is_zero()) out.emplace(m, s);
    }
    return out;
}

ScalarPoly kp_add(const ScalarPoly& p, const ScalarPoly& q) {
    ScalarPoly out = p;
    for (const auto& [m, s] : q) {
        auto it = out.find(m);
        if (it == out.end()) out.emplace(m, s);
        else {
            it->second += s;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

ScalarPoly kp_scale(const Scalar& s, const ScalarPoly& p) {
    ScalarPoly out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p) out.emplace(m, s * c);
    return out;
}

ScalarPoly kp_multiply(const ScalarPoly& p, const ScalarPoly& q, const VarSet& vars) {
    ScalarPoly out;
    for (const auto& [m1, s1] : p)
        for (const auto& [m2, s2] : q) {
            auto [sgn, m12] = monomial_multiply(vars, m1, m2);
            if (sgn == 0) continue;
            Scalar add = Scalar{sgn} * s1 * s2;
            auto it = out.find(m12);
            if (it == out.end()) out.emplace(m12, add);
            else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

ScalarPoly kp_truncate(const ScalarPoly& p, int max_order) {
    ScalarPoly out;
    for (const auto& [m, s] : p)
        if (m.degree() <= max_order) out.emplace(m, s);
    return out;
}

bool kp_is_zero(const ScalarPoly& p) {
    for (const auto& [m, s] : p)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace dgbv
