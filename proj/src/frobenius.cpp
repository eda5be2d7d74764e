#include "dgbv/frobenius.hpp"

#include <stdexcept>

namespace dgbv {

namespace {

Scalar sign_of(int parity_product) { return Scalar{parity_product % 2 ? -1 : 1}; }

}  // namespace

SuperPolynomial extend_class(size_t j, const MCSolution& sol) {
    return sp_contract(sol.vars, j, sol.truncated_sum());
}

std::vector<SuperPolynomial> extend_all(const MCSolution& sol) {
    std::vector<SuperPolynomial> out;
    for (size_t j = 0; j < sol.classes.size(); ++j) out.push_back(extend_class(j, sol));
    return out;
}

SuperPolynomial extension_closedness_residual(const SuperPolynomial& ext,
                                              const MCSolution& sol,
                                              const DgbvAlgebra& A) {
    SuperPolynomial res = sp_apply_linear(A.delta, A.delta_parity(), sol.vars, ext);
    res = sp_add(res, sp_bracket(A, sol.vars, sol.truncated_sum(), ext));
    return sp_truncate(res, sol.order - 1);
}

TensorCheck metric_constancy_check(const MCSolution& sol, const DgbvAlgebra& A) {
    TensorCheck out;
    auto ext = extend_all(sol);
    for (size_t i = 0; i < ext.size(); ++i)
        for (size_t j = 0; j < ext.size(); ++j) {
            ScalarPoly lhs = sp_pair_down(sp_wedge(A.alg, sol.vars, ext[i], ext[j]),
                                          A.integral);
            Scalar g = A.pairing(sol.classes[i], sol.classes[j]);
            ScalarPoly rhs;
            if (!g.is_zero()) rhs.emplace(SuperMonomial::one(sol.vars.count()), g);
            if (!kp_is_zero(kp_add(lhs, kp_scale(Scalar{-1}, rhs)))) {
                out.pass = false;
                out.witness = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                return out;
            }
        }
    return out;
}

FrobeniusData product_tensor(const MCSolution& sol, const DgbvAlgebra& A) {
    FrobeniusData F;
    F.h = sol.classes.size();
    F.vars = sol.vars;
    F.trusted_order = sol.order - 1;
    F.metric = Matrix(F.h, F.h);
    for (size_t i = 0; i < F.h; ++i)
        for (size_t j = 0; j < F.h; ++j)
            F.metric.at(i, j) = A.pairing(sol.classes[i], sol.classes[j]);
    if (F.metric.rank() != F.h)
        throw std::runtime_error("product_tensor: degenerate metric (integral not nice)");
    F.metric_inv = F.metric.inverse();

    for (size_t j = 0; j < F.h; ++j) F.class_parity.push_back(sol.vars.parity[j]);

    auto ext = extend_all(sol);
    F.c.resize(F.h * F.h * F.h);
    for (size_t i = 0; i < F.h; ++i)
        for (size_t j = 0; j < F.h; ++j) {
            SuperPolynomial ij = sp_wedge(A.alg, sol.vars, ext[i], ext[j]);
            for (size_t k = 0; k < F.h; ++k) {
                SuperPolynomial ijk = sp_wedge(A.alg, sol.vars, ij, ext[k]);
                F.c[(i * F.h + j) * F.h + k] =
                    kp_truncate(sp_pair_down(ijk, A.integral), F.trusted_order);
            }
        }
    return F;
}

std::vector<ScalarPoly> product_classes(size_t i, size_t j, const FrobeniusData& F) {
    // c_ijm = sum_n lambda^n g_nm, so lambda^n = sum_m c_ijm (g^{-1})_{mn};
    // the metric is supersymmetric, not symmetric, so the side matters
    std::vector<ScalarPoly> out(F.h);
    for (size_t n = 0; n < F.h; ++n) {
        ScalarPoly acc;
        for (size_t m = 0; m < F.h; ++m) {
            const Scalar& ginv = F.metric_inv.at(m, n);
            if (ginv.is_zero()) continue;
            acc = kp_add(acc, kp_scale(ginv, F.at(i, j, m)));
        }
        out[n] = std::move(acc);
    }
    return out;
}

TensorCheck check_tensor_symmetry(const FrobeniusData& F) {
    TensorCheck out;
    auto diff_zero = [&](const ScalarPoly& a, const ScalarPoly& b, const Scalar& s) {
        return kp_is_zero(kp_add(a, kp_scale(-s, b)));
    };
    for (size_t i = 0; i < F.h && out.pass; ++i)
        for (size_t j = 0; j < F.h && out.pass; ++j)
            for (size_t k = 0; k < F.h; ++k) {
                Scalar s_ij = sign_of(F.class_parity[i] * F.class_parity[j]);
                Scalar s_jk = sign_of(F.class_parity[j] * F.class_parity[k]);
                if (!diff_zero(F.at(i, j, k), F.at(j, i, k), s_ij) ||
                    !diff_zero(F.at(i, j, k), F.at(i, k, j), s_jk)) {
                    out.pass = false;
                    out.witness = "c(" + std::to_string(i) + "," + std::to_string(j) +
                                  "," + std::to_string(k) + ") swap";
                    break;
                }
            }
    if (!out.pass) return out;
    // identity axis: c_0jk = g_jk, constant
    for (size_t j = 0; j < F.h && out.pass; ++j)
        for (size_t k = 0; k < F.h; ++k) {
            ScalarPoly expected;
            if (!F.metric.at(j, k).is_zero())
                expected.emplace(SuperMonomial::one(F.vars.count()), F.metric.at(j, k));
            if (!kp_is_zero(kp_add(F.at(0, j, k), kp_scale(Scalar{-1}, expected)))) {
                out.pass = false;
                out.witness = "c(0," + std::to_string(j) + "," + std::to_string(k) +
                              ") != g";
                break;
            }
        }
    return out;
}

TensorCheck check_associativity(const FrobeniusData& F) {
    TensorCheck out;
    const size_t h = F.h;
    // B[i][j][n] = sum_m c_ijm g^{mn}
    std::vector<ScalarPoly> B(h * h * h);
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < h; ++j)
            for (size_t n = 0; n < h; ++n) {
                ScalarPoly acc;
                for (size_t m = 0; m < h; ++m) {
                    const Scalar& g = F.metric_inv.at(m, n);
                    if (g.is_zero() || F.at(i, j, m).empty()) continue;
                    acc = kp_add(acc, kp_scale(g, F.at(i, j, m)));
                }
                B[(i * h + j) * h + n] = std::move(acc);
            }
    auto contract = [&](size_t i, size_t j, size_t k, size_t l) {
        ScalarPoly acc;
        for (size_t n = 0; n < h; ++n) {
            const ScalarPoly& b = B[(i * h + j) * h + n];
            const ScalarPoly& c = F.at(n, k, l);
            if (b.empty() || c.empty()) continue;
            acc = kp_add(acc, kp_multiply(b, c, F.vars));
        }
        return kp_truncate(acc, F.trusted_order);
    };
    for (size_t i = 0; i < h && out.pass; ++i)
        for (size_t j = 0; j < h && out.pass; ++j)
            for (size_t k = 0; k < h && out.pass; ++k)
                for (size_t l = 0; l < h; ++l) {
                    ScalarPoly lhs = contract(i, j, k, l);
                    ScalarPoly rhs = contract(i, k, j, l);
                    Scalar s = sign_of(F.class_parity[j] * F.class_parity[k]);
                    if (!kp_is_zero(kp_add(lhs, kp_scale(-s, rhs)))) {
                        out.pass = false;
                        out.witness = "(" + std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(k) + "," + std::to_string(l) +
                                      ")";
                        break;
                    }
                }
    return out;
}

TensorCheck check_potential_integrability(const FrobeniusData& F) {
    TensorCheck out;
    const size_t h = F.h;
    int order = F.trusted_order - 1;
    if (order < 0) return out;
    auto deriv = [&](size_t l, size_t i, size_t j, size_t k) {
        return kp_truncate(kp_contract(F.vars, l, F.at(i, j, k)), order);
    };
    // total supersymmetry in (l, i, j, k): it is enough to check the first
    // adjacent swap, given check_tensor_symmetry covers the inner three
    for (size_t l = 0; l < h && out.pass; ++l)
        for (size_t i = 0; i < h && out.pass; ++i)
            for (size_t j = 0; j < h && out.pass; ++j)
                for (size_t k = 0; k < h; ++k) {
                    Scalar s = sign_of(F.class_parity[l] * F.class_parity[i]);
                    ScalarPoly lhs = deriv(l, i, j, k);
                    ScalarPoly rhs = deriv(i, l, j, k);
                    if (!kp_is_zero(kp_add(lhs, kp_scale(-s, rhs)))) {
                        out.pass = false;
                        out.witness = "d_" + std::to_string(l) + " c(" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")";
                        break;
                    }
                }
    return out;
}

}  // namespace dgbv
