#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "dgbv/algebra.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/hodge.hpp"
#include "dgbv/mc.hpp"

namespace dgbv {

/// Finite-dimensional Lie algebra by structure constants [e_i, e_j] = f^k_ij e_k.
struct LieAlgebraData {
    size_t dim = 0;
    // f[k][i][j], antisymmetric in (i, j)
    std::vector<std::vector<std::vector<Scalar>>> f;

    static LieAlgebraData abelian(size_t dim);
    void set(size_t k, size_t i, size_t j, const Scalar& value);  // also sets (j,i)
    Vec bracket_basis(size_t i, size_t j) const;  // in the degree-1 slot of Lambda g
    bool jacobi_holds() const;
};

/// Exterior algebra on m odd degree-1 generators; basis = subsets ordered by
/// (degree, bitmask).  Used both for forms (Lambda g*) and polyvectors
/// (Lambda g).
GradedAlgebra exterior_algebra(size_t generators, const std::string& gen_prefix = "e");

/// Index of the basis monomial for a generator subset bitmask.
size_t exterior_index(size_t generators, unsigned mask);
unsigned exterior_mask(const GradedAlgebra& alg, size_t index);

struct CeModel {
    GradedAlgebra alg;   // Lambda g*
    Matrix d;            // Chevalley-Eilenberg differential
    Vec integral;        // top-degree coefficient functional
    LieAlgebraData lie;
};

/// d e^k = - sum_{i<j} f^k_ij e^i ^ e^j, extended as an odd derivation.
/// Throws when Jacobi fails (d^2 would not vanish).
CeModel chevalley_eilenberg_model(const LieAlgebraData& g);

/// Bivector w in Lambda^2 g as an element of the polyvector exterior algebra.
Vec bivector_element(size_t generators, const std::vector<std::tuple<size_t, size_t, Scalar>>& terms);

/// Contraction iota_w on forms; iota_{a^b} = iota_a iota_b, extended linearly
/// in w.  w lives in the polyvector algebra, the result acts on Lambda g*.
Matrix contraction_operator(const GradedAlgebra& forms, const Vec& w);

/// Algebraic Schouten-Nijenhuis bracket of polyvectors (constant
/// coefficients), extending the Lie bracket as a biderivation.
Vec schouten(const LieAlgebraData& g, const GradedAlgebra& polyvectors, const Vec& a,
             const Vec& b);

struct KoszulResult {
    bool poisson = false;        // [w, w] == 0
    bool square_zero = false;    // Delta^2 == 0
    bool anticommutes = false;   // d Delta + Delta d == 0
    Matrix bv;
    bool ok() const { return poisson && square_zero && anticommutes; }
};

/// Delta = iota_w d - d iota_w with Koszul's identities certified.
KoszulResult koszul_delta(const GradedAlgebra& forms, const Matrix& d,
                          const LieAlgebraData& g, const Vec& w);

/// Contraction-integral identity: integral (w |- a) ^ b == integral
/// a ^ (w |- b) over all basis pairs with |a| + |b| = top + 2.
struct PairCheck {
    bool pass = true;
    std::string witness;
};
PairCheck check_contraction_identity(const GradedAlgebra& forms, const Vec& integral,
                                     const Matrix& contraction);
/// integral (Delta a) ^ b == (-1)^{|a|} integral a ^ (Delta b), all pairs.
PairCheck check_delta_integral(const GradedAlgebra& forms, const Vec& integral,
                               const Matrix& bv);

/// Bigraded Kaehler-type model: (p,q)-graded algebra with partial/dbar, a
/// Hermitian inner product, a Kaehler class, and a real structure.
struct BigradedModel {
    GradedAlgebra alg;
    Matrix partial;   // bidegree (1,0) part of d
    Matrix dbar;      // bidegree (0,1) part of d
    InnerProduct ip;
    Vec omega;
    Matrix conj_map;  // antilinear real structure: v -> conj_map * conj(v)
    Vec integral;
};

/// Constant-coefficient (p,q)-form algebra of a complex torus of complex
/// dimension n: d = partial = dbar = 0, standard inner product,
/// omega = (i/2) sum dz_k ^ dzb_k.
BigradedModel bigraded_kahler_model(size_t n);

DgbvAlgebra dolbeault_dgbv(const BigradedModel& m);  // (dbar, -i partial*)
DgbvAlgebra mirror_dgbv(const BigradedModel& m);     // (partial, i dbar*)
DgbvAlgebra derham_dgbv(const BigradedModel& m);     // (d, i(dbar* - partial*))

/// Real (conjugation-fixed) harmonic basis with the unit first; entries are
/// degree-homogeneous.
std::vector<Vec> real_harmonic_basis(const BigradedModel& m);

struct CompareReport {
    bool kahler_ok = false;
    bool lambda_commutator_matches = false;
    SimultaneousReport sim;
    bool metrics_equal = false;
    bool tensors_equal = false;
    bool ring_at_origin = false;  // c(0) = triple cup products for both
    FrobeniusData dolbeault_data;
    FrobeniusData derham_data;
    std::string error;
    bool identified() const {
        return kahler_ok && sim.ok && metrics_equal && tensors_equal && ring_at_origin;
    }
};

/// Theorem-level identification harness: one simultaneous solution, two
/// Frobenius extractions, exact tensor comparison.
CompareReport compare_structures(const BigradedModel& m, int order);

}  // namespace dgbv
