#pragma once

#include <string>
#include <vector>

#include "dgbv/algebra.hpp"
#include "dgbv/matrix.hpp"

namespace dgbv {

/// Hermitian positive-definite form on the graded basis, block-diagonal by
/// degree.  <a, b> = conj(a)^T gram b (conjugate-linear in the first slot).
struct InnerProduct {
    Matrix gram;

    static InnerProduct standard(size_t n) { return InnerProduct{Matrix::identity(n)}; }

    bool is_hermitian() const;
    /// Leading principal minors of the (real-valued) determinants, exact.
    bool is_positive_definite() const;
    bool respects_grading(const GradedBasis& basis) const;
    Scalar eval(const Vec& a, const Vec& b) const;
};

/// adjoint(f) = gram^{-1} f^H gram; satisfies <f a, b> = <a, adjoint(f) b>.
Matrix adjoint(const Matrix& f, const InnerProduct& ip);

/// f adjoint(f) + adjoint(f) f.
Matrix laplacian(const Matrix& f, const InnerProduct& ip);

/// Exact Hodge package for one odd square-zero operator: Laplacian, harmonic
/// projector, and Green operator with G lap = lap G = id - P.
struct HodgeContext {
    Matrix op;        // f
    Matrix op_adj;    // f*
    Matrix lap;       // f f* + f* f
    Matrix harmonic;  // orthogonal projector onto Ker lap
    Matrix green;     // partial inverse vanishing on harmonics
};

/// Requires f^2 = 0 (throws otherwise).
HodgeContext make_hodge(const Matrix& f, const InnerProduct& ip);

struct HodgeParts {
    Vec harmonic;  // in Ker lap
    Vec image;     // in Im f
    Vec coimage;   // in Im f*
};
HodgeParts hodge_decompose(const Vec& v, const HodgeContext& ctx);

/// Lemma-condition checker: exact subspace equalities (A), (B), (C) plus the
/// cohomology-dimension identities they imply.
struct ConditionReport {
    bool cond_a = false;
    bool cond_b = false;
    bool cond_c = false;
    size_t dim_im_delta_bv = 0;   // dim Im delta Delta
    size_t dim_im_bv_delta = 0;   // dim Im Delta delta
    size_t dim_imd_kerbv = 0;     // dim (Im delta  cap Ker Delta)
    size_t dim_imbv_kerd = 0;     // dim (Im Delta  cap Ker delta)
    size_t dim_joint_cut = 0;     // dim ((Ker delta cap Ker Delta) cap (Im delta + Im Delta))
    size_t dim_h_delta = 0;
    size_t dim_h_bv = 0;
    size_t dim_joint_quotient = 0;  // dim (Ker delta cap Ker Delta)/Im delta Delta

    bool conditions_hold() const { return cond_a && cond_b; }
    bool internally_consistent() const { return (cond_a && cond_b) == cond_c; }
};

ConditionReport check_lemma_conditions(const DgbvAlgebra& A);

/// Canonical harmonic cohomology basis: e_0 = unit, then Ker(lap) echelon
/// bases per ascending degree.
struct CohomologyBasis {
    std::vector<Vec> vectors;
    std::vector<int> degree;          // degree of each class
    std::vector<bool> in_joint_kernel;  // e_j in Ker delta cap Ker Delta
    bool unit_harmonic = false;

    bool all_joint() const;
};

CohomologyBasis cohomology_basis(const DgbvAlgebra& A, const InnerProduct& ip);

/// Hard Lefschetz: exact rank of wedging by omega^k as a map of cohomology
/// H^{n-k} -> H^{n+k}, n = half the top degree.
struct LefschetzRow {
    int k = 0;
    size_t dim_lower = 0;
    size_t dim_upper = 0;
    size_t rank = 0;
    bool pass = false;  // isomorphism
};
struct LefschetzReport {
    std::vector<LefschetzRow> rows;
    bool omega_closed = false;
    bool all_pass() const;
};

LefschetzReport hard_lefschetz_check(const DgbvAlgebra& A, const InnerProduct& ip,
                                     const Vec& omega);

/// Kaehler-identity suite on a bigraded model (partial, dbar, ip, omega).
struct KahlerReport {
    std::vector<AxiomResult> results;
    bool all_pass() const;
    /// The printed-commutator cross-check [Lambda, d] == Delta, reported
    /// separately from the identities proper.
    bool lambda_commutator_matches = false;
};

KahlerReport check_kahler_identities(const GradedAlgebra& alg, const Matrix& partial,
                                     const Matrix& dbar, const InnerProduct& ip,
                                     const Vec& omega);

}  // namespace dgbv
