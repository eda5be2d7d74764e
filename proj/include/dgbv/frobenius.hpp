#pragma once

#include <string>
#include <vector>

#include "dgbv/mc.hpp"

namespace dgbv {

/// Formal Frobenius manifold data extracted from a Maurer-Cartan solution:
/// constant metric g_ij = integral(e_i ^ e_j), truncated product tensor
/// c_ijk(x) = integral(extend(i) ^ extend(j) ^ extend(k)), identity index 0.
struct FrobeniusData {
    size_t h = 0;                   // number of classes
    Matrix metric;                  // h x h, constant in x
    Matrix metric_inv;
    std::vector<ScalarPoly> c;      // flattened (i*h + j)*h + k
    int trusted_order = 0;          // N - 1
    VarSet vars;
    std::vector<int> class_parity;

    const ScalarPoly& at(size_t i, size_t j, size_t k) const {
        return c[(i * h + j) * h + k];
    }
};

/// The extension e_j -> supercontract_j(Gamma); leading term is e_j.
SuperPolynomial extend_class(size_t j, const MCSolution& sol);
std::vector<SuperPolynomial> extend_all(const MCSolution& sol);

/// delta_Gamma residual of an extended class, truncated to the trusted order.
SuperPolynomial extension_closedness_residual(const SuperPolynomial& ext,
                                              const MCSolution& sol,
                                              const DgbvAlgebra& A);

struct TensorCheck {
    bool pass = true;
    std::string witness;
};

/// integral(extend(i) ^ extend(j)) must equal g_ij identically in x.
TensorCheck metric_constancy_check(const MCSolution& sol, const DgbvAlgebra& A);

/// Builds the full tensor package; throws when the metric is degenerate
/// (integral not nice on the chosen classes).
FrobeniusData product_tensor(const MCSolution& sol, const DgbvAlgebra& A);

/// e_i o e_j expanded in the class basis: coefficients lambda^n(x) solving
/// sum_n g_mn lambda^n = c_ijm.
std::vector<ScalarPoly> product_classes(size_t i, size_t j, const FrobeniusData& F);

/// Supersymmetry of c under index swaps (Koszul signs from class parities)
/// plus the identity axis c_0jk = g_jk.
TensorCheck check_tensor_symmetry(const FrobeniusData& F);

/// Associativity contraction: sum_{m,n} c_ijm g^{mn} c_nkl equals the (j k)
/// swap times (-1)^{|e_j||e_k|}, identically in x through the trusted order.
TensorCheck check_associativity(const FrobeniusData& F);

/// d/dx^l c_ijk totally supersymmetric in (l, i, j, k) through trusted-1.
TensorCheck check_potential_integrability(const FrobeniusData& F);

}  // namespace dgbv
