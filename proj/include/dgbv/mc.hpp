#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dgbv/algebra.hpp"
#include "dgbv/hodge.hpp"
#include "dgbv/super.hpp"

namespace dgbv {

/// Gerstenhaber bracket on A_K, computed through the generator formula with
/// the extended wedge and Delta (total parity in place of degree parity).
SuperPolynomial sp_bracket(const DgbvAlgebra& A, const VarSet& vars,
                           const SuperPolynomial& p, const SuperPolynomial& q);

/// Wedge on A_K.
SuperPolynomial sp_wedge(const GradedAlgebra& alg, const VarSet& vars,
                         const SuperPolynomial& p, const SuperPolynomial& q);

/// Per-order normalization certificate for a solution term.
struct NormalizationCert {
    bool in_im_bv = false;            // coefficient vectors in Im Delta
    bool in_im_homotopy_bv = false;   // in Im delta* Delta (analytic mode)
    bool bv_closed = false;           // Delta Gamma_n = 0
    bool even_total_parity = false;
    bool no_x0 = false;
};

struct MCSolution {
    VarSet vars;
    std::vector<Vec> classes;               // harmonic basis e_j, e_0 = unit
    std::vector<SuperPolynomial> terms;     // terms[n-1] = Gamma_n, n = 1..N
    int order = 0;
    std::vector<NormalizationCert> certs;   // certs[n-2] for Gamma_n, n >= 2

    const SuperPolynomial& term(int n) const { return terms[n - 1]; }
    SuperPolynomial truncated_sum() const;  // Gamma_1 + ... + Gamma_N
    bool all_certified(bool analytic) const;
};

struct ObstructionReport {
    int order = 0;
    SuperPolynomial harmonic_witness;  // harmonic projection of the order-n RHS
    SuperPolynomial rhs;               // the full order-n RHS
    std::string detail;
};

using SolveResult = std::variant<MCSolution, ObstructionReport>;

/// Gamma_1 = sum_j x^j e_j over the supplied harmonic classes; throws when a
/// class is not in Ker delta cap Ker Delta.
std::pair<VarSet, SuperPolynomial> initial_term(const DgbvAlgebra& A,
                                                const std::vector<Vec>& classes);

struct SolveOptions {
    int order = 4;
    bool analytic = true;   // homotopy delta* G (otherwise identical here; kept
                            // for the report's mode field)
    bool best_effort = false;  // keep solving past condition failures
};

/// Order-by-order solve: Gamma_n = -1/2 delta* G (sum_{p+q=n} [G_p * G_q]).
SolveResult solve(const DgbvAlgebra& A, const InnerProduct& ip,
                  const std::vector<Vec>& classes, const SolveOptions& opt);

/// Diagnostic re-check of a solution: Maurer-Cartan residual per x-order,
/// Delta-closedness, x^0 confinement, parity normalization.
struct McVerification {
    std::vector<SuperPolynomial> residual_by_order;  // index n-1 -> order n
    bool residual_zero = false;
    bool bv_closed = false;
    bool x0_confined = false;
    bool parity_ok = false;
    bool valid() const { return residual_zero && bv_closed && x0_confined && parity_ok; }
};

McVerification verify_mc(const MCSolution& sol, const DgbvAlgebra& A);

/// Simultaneous bigraded solve: one Gamma solving the Dolbeault equation
/// (delta = dbar, bracket from -i partial*), the mirror equation (delta =
/// partial, bracket from i dbar*), and the de Rham equation, with a real
/// harmonic basis.  conj_map is the antilinear real structure: v -> C conj(v).
struct SimultaneousReport {
    bool ok = false;
    MCSolution solution;
    bool dolbeault_residual_zero = false;
    bool mirror_residual_zero = false;
    bool derham_residual_zero = false;
    bool real = false;  // conj(Gamma) == Gamma
    std::string error;
};

SimultaneousReport simultaneous_solve(const DgbvAlgebra& dolbeault,
                                      const DgbvAlgebra& mirror,
                                      const DgbvAlgebra& derham,
                                      const Matrix& conj_map, const InnerProduct& ip,
                                      const std::vector<Vec>& real_classes, int order);

/// conj of an A_K element under a real structure (x^j real).
SuperPolynomial sp_conjugate(const SuperPolynomial& p, const Matrix& conj_map);

}  // namespace dgbv
