#pragma once

#include <map>
#include <vector>

#include "dgbv/matrix.hpp"

namespace dgbv {

/// Deformation variables x^0..x^{h-1}; parity[j] is the parity of x^j,
/// inherited from the cohomology class e_j it is dual to.
struct VarSet {
    std::vector<int> parity;  // 0 = even, 1 = odd
    size_t count() const { return parity.size(); }
};

/// Canonical-form super monomial: exponent vector in increasing variable
/// index order, odd exponents in {0,1}.  Signs live in coefficients.
struct SuperMonomial {
    std::vector<int> exp;

    static SuperMonomial one(size_t nvars) { return SuperMonomial{std::vector<int>(nvars, 0)}; }
    static SuperMonomial var(size_t nvars, size_t j) {
        SuperMonomial m = one(nvars);
        m.exp[j] = 1;
        return m;
    }

    int degree() const;                      // sum of exponents
    int parity(const VarSet& vars) const;    // sum exp*parity mod 2
    bool uses(size_t j) const { return exp[j] > 0; }

    friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) {
        return a.exp == b.exp;
    }
    friend bool operator<(const SuperMonomial& a, const SuperMonomial& b);
};

/// Sign of permuting graded factors: (-1)^{#(odd,odd) inversions}.
/// perm[i] is the new position of factor i.  Throws on length mismatch or
/// non-bijective perm.
int koszul_sign(const std::vector<int>& parities, const std::vector<size_t>& perm);

/// m1 * m2 in canonical order.  Returns {0, _} when an odd variable repeats,
/// otherwise {+-1, product}.
std::pair<int, SuperMonomial> monomial_multiply(const VarSet& vars, const SuperMonomial& m1,
                                                const SuperMonomial& m2);

/// Left super-derivation d/dx^j on a monomial: {sign, multiplicity, reduced
/// monomial}; multiplicity 0 means the derivative vanishes.
struct MonoDeriv {
    int sign = 0;
    int multiplicity = 0;
    SuperMonomial reduced;
};
MonoDeriv monomial_contract(const VarSet& vars, size_t j, const SuperMonomial& m);

/// Element of A_K = K (tensor) A: sparse map monomial -> coefficient in A.
using SuperPolynomial = std::map<SuperMonomial, Vec>;
/// Element of K itself (scalar coefficients).
using ScalarPoly = std::map<SuperMonomial, Scalar>;

void sp_add_term(SuperPolynomial& p, const SuperMonomial& m, const Vec& v);
SuperPolynomial sp_add(const SuperPolynomial& p, const SuperPolynomial& q);
SuperPolynomial sp_sub(const SuperPolynomial& p, const SuperPolynomial& q);
SuperPolynomial sp_scale(const Scalar& s, const SuperPolynomial& p);
bool sp_is_zero(const SuperPolynomial& p);

/// Terms of x-degree exactly n / at most n.
SuperPolynomial sp_order_part(const SuperPolynomial& p, int n);
SuperPolynomial sp_truncate(const SuperPolynomial& p, int max_order);
int sp_max_order(const SuperPolynomial& p);

/// Total parity of a homogeneous super polynomial (monomial parity +
/// coefficient parity), or -1 if mixed/empty-undetermined.
int sp_total_parity(const SuperPolynomial& p, const VarSet& vars,
                    const std::vector<int>& basis_parity);

/// Bilinear product with the Koszul sign from moving monomial parities past
/// coefficient parities: (m1 (x) a)(m2 (x) b) = (-1)^{|a||m2|} m1 m2 (x) a^b.
/// Mixed-parity coefficients are split along basis parity first.
template <typename WedgeFn>
SuperPolynomial sp_multiply(const SuperPolynomial& p, const SuperPolynomial& q,
                            const VarSet& vars, const std::vector<int>& basis_parity,
                            WedgeFn&& wedge);

/// d/dx^j as a left super-derivation on A_K.
SuperPolynomial sp_contract(const VarSet& vars, size_t j, const SuperPolynomial& p);
ScalarPoly kp_contract(const VarSet& vars, size_t j, const ScalarPoly& p);

/// Coefficient-wise application of a linear map of the given parity; an odd
/// map picks up (-1)^{|m|} moving past the monomial.
SuperPolynomial sp_apply_linear(const Matrix& f, int f_parity, const VarSet& vars,
                                const SuperPolynomial& p);

/// Apply a linear functional to every coefficient.
ScalarPoly sp_pair_down(const SuperPolynomial& p, const Vec& functional);

ScalarPoly kp_add(const ScalarPoly& p, const ScalarPoly& q);
ScalarPoly kp_scale(const Scalar& s, const ScalarPoly& p);
ScalarPoly kp_multiply(const ScalarPoly& p, const ScalarPoly& q, const VarSet& vars);
ScalarPoly kp_truncate(const ScalarPoly& p, int max_order);
bool kp_is_zero(const ScalarPoly& p);

// --- template definition ---

template <typename WedgeFn>
SuperPolynomial sp_multiply(const SuperPolynomial& p, const SuperPolynomial& q,
                            const VarSet& vars, const std::vector<int>& basis_parity,
                            WedgeFn&& wedge) {
    SuperPolynomial out;
    for (const auto& [m1, a] : p) {
        // split a by coefficient parity so the sign below is well-defined
        Vec a_part[2] = {zero_vec(a.size()), zero_vec(a.size())};
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) a_part[basis_parity[i] & 1][i] = a[i];
        for (const auto& [m2, b] : q) {
            auto [msign, m12] = monomial_multiply(vars, m1, m2);
            if (msign == 0) continue;
            int pm2 = m2.parity(vars);
            for (int pa = 0; pa < 2; ++pa) {
                if (is_zero(a_part[pa])) continue;
                int sgn = msign * ((pa * pm2) % 2 ? -1 : 1);
                Vec c = wedge(a_part[pa], b);
                if (sgn < 0) c = Scalar{-1} * c;
                sp_add_term(out, m12, c);
            }
        }
    }
    return out;
}

}  // namespace dgbv
