#include "dgbv/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgbv {

bool InnerProduct::is_hermitian() const {
    return gram == gram.conj_transpose();
}

bool InnerProduct::is_positive_definite() const {
    if (!is_hermitian()) return false;
    size_t n = gram.rows();
    for (size_t k = 1; k <= n; ++k) {
        Matrix minor(k, k);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) minor.at(r, c) = gram.at(r, c);
        Scalar d = minor.det();
        if (!d.is_real() || d.re <= 0) return false;
    }
    return true;
}

bool InnerProduct::respects_grading(const GradedBasis& basis) const {
    for (size_t r = 0; r < gram.rows(); ++r)
        for (size_t c = 0; c < gram.cols(); ++c)
            if (!gram.at(r, c).is_zero() && basis.degree(r) != basis.degree(c))
                return false;
    return true;
}

Scalar InnerProduct::eval(const Vec& a, const Vec& b) const {
    Vec gb = gram.apply(b);
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i].conj() * gb[i];
    return s;
}

Matrix adjoint(const Matrix& f, const InnerProduct& ip) {
    if (!ip.is_positive_definite())
        throw std::invalid_argument("adjoint: inner product not positive definite");
    return ip.gram.inverse() * f.conj_transpose() * ip.gram;
}

Matrix laplacian(const Matrix& f, const InnerProduct& ip) {
    Matrix fs = adjoint(f, ip);
    return f * fs + fs * f;
}

HodgeContext make_hodge(const Matrix& f, const InnerProduct& ip) {
    if (!(f * f).is_zero()) throw std::invalid_argument("make_hodge: f^2 != 0");
    HodgeContext ctx;
    ctx.op = f;
    ctx.op_adj = adjoint(f, ip);
    ctx.lap = f * ctx.op_adj + ctx.op_adj * f;
    const size_t n = f.rows();

    Matrix K = ctx.lap.kernel();  // n x h
    if (K.cols() == 0) {
        ctx.harmonic = Matrix(n, n);
    } else {
        Matrix KM = K.conj_transpose() * ip.gram;       // h x n
        Matrix gramK = KM * K;                          // h x h, invertible (PD form)
        ctx.harmonic = K * gramK.inverse() * KM;
    }

    // G: unique solution of lap u = (I - P)v with u orthogonal to Ker lap
    Matrix constraint = K.cols() ? K.conj_transpose() * ip.gram : Matrix(0, n);
    Matrix system = Matrix::vstack(ctx.lap, constraint);
    Matrix rhs_top = Matrix::identity(n) - ctx.harmonic;
    std::vector<Vec> cols;
    for (size_t c = 0; c < n; ++c) {
        Vec b(system.rows());
        for (size_t r = 0; r < n; ++r) b[r] = rhs_top.at(r, c);
        auto u = system.solve(b);
        if (!u) throw std::logic_error("make_hodge: green system inconsistent");
        cols.push_back(*u);
    }
    ctx.green = Matrix::from_columns(cols);
    return ctx;
}

HodgeParts hodge_decompose(const Vec& v, const HodgeContext& ctx) {
    HodgeParts parts;
    parts.harmonic = ctx.harmonic.apply(v);
    Vec gv = ctx.green.apply(v);
    parts.image = ctx.op.apply(ctx.op_adj.apply(gv));
    parts.coimage = ctx.op_adj.apply(ctx.op.apply(gv));
    return parts;
}

ConditionReport check_lemma_conditions(const DgbvAlgebra& A) {
    ConditionReport rep;
    Subspace im_dD(Matrix(A.delta * A.bvop).image());
    Subspace im_Dd(Matrix(A.bvop * A.delta).image());
    Subspace ker_d(A.delta.kernel());
    Subspace ker_D(A.bvop.kernel());
    Subspace im_d(A.delta.image());
    Subspace im_D(A.bvop.image());

    Subspace imd_kerD = intersect(im_d, ker_D);
    Subspace imD_kerd = intersect(im_D, ker_d);
    Subspace joint_cut = intersect(intersect(ker_d, ker_D), im_d + im_D);

    rep.dim_im_delta_bv = im_dD.dim();
    rep.dim_im_bv_delta = im_Dd.dim();
    rep.dim_imd_kerbv = imd_kerD.dim();
    rep.dim_imbv_kerd = imD_kerd.dim();
    rep.dim_joint_cut = joint_cut.dim();

    rep.cond_a = (im_dD == im_Dd) && (im_dD == imd_kerD);
    rep.cond_b = (im_dD == im_Dd) && (im_dD == imD_kerd);
    rep.cond_c = (im_dD == im_Dd) && (im_dD == joint_cut);

    rep.dim_h_delta = ker_d.dim() - im_d.dim();
    rep.dim_h_bv = ker_D.dim() - im_D.dim();
    rep.dim_joint_quotient = intersect(ker_d, ker_D).dim() - im_dD.dim();
    return rep;
}

bool CohomologyBasis::all_joint() const {
    return std::all_of(in_joint_kernel.begin(), in_joint_kernel.end(),
                       [](bool b) { return b; });
}

CohomologyBasis cohomology_basis(const DgbvAlgebra& A, const InnerProduct& ip) {
    CohomologyBasis out;
    const size_t n = A.dim();
    HodgeContext ctx = make_hodge(A.delta, ip);
    Subspace kernel(ctx.lap.kernel());

    Vec unit = A.alg.unit();
    out.unit_harmonic = is_zero(ctx.lap.apply(unit));
    if (!out.unit_harmonic) return out;

    int top = A.alg.basis.top_degree();
    for (int d = 0; d <= top; ++d) {
        std::vector<Vec> coords;
        for (size_t i = 0; i < n; ++i)
            if (A.alg.basis.degree(i) == d) coords.push_back(unit_vec(n, i));
        if (coords.empty()) continue;
        Subspace slice = intersect(kernel, Subspace(Matrix::from_columns(coords)));
        std::vector<Vec> basis = slice.basis();
        if (d == 0) {
            // unit first, then complete with the remaining canonical vectors
            std::vector<Vec> cols = {unit};
            cols.insert(cols.end(), basis.begin(), basis.end());
            Matrix m = Matrix::from_columns(cols);
            Matrix red = m;
            auto piv = red.rref();
            basis.clear();
            for (size_t p : piv) basis.push_back(m.column(p));
        }
        for (auto& v : basis) {
            out.degree.push_back(d);
            out.in_joint_kernel.push_back(is_zero(A.delta.apply(v)) &&
                                          is_zero(A.bvop.apply(v)));
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

bool LefschetzReport::all_pass() const {
    return omega_closed && std::all_of(rows.begin(), rows.end(),
                                       [](const LefschetzRow& r) { return r.pass; });
}

LefschetzReport hard_lefschetz_check(const DgbvAlgebra& A, const InnerProduct& ip,
                                     const Vec& omega) {
    LefschetzReport rep;
    rep.omega_closed = is_zero(A.delta.apply(omega));
    if (!rep.omega_closed) return rep;

    HodgeContext ctx = make_hodge(A.delta, ip);
    CohomologyBasis coh = cohomology_basis(A, ip);
    // class of a closed vector = its harmonic projection (the delta-exact part
    // dies, the coexact part is zero for closed inputs)
    auto project = [&](const Vec& v) { return ctx.harmonic.apply(v); };

    int top = A.alg.basis.top_degree();
    int half = top / 2;
    for (int k = 0; k <= half; ++k) {
        LefschetzRow row;
        row.k = k;
        std::vector<Vec> lower, upper;
        for (size_t j = 0; j < coh.vectors.size(); ++j) {
            if (coh.degree[j] == half - k) lower.push_back(coh.vectors[j]);
            if (coh.degree[j] == half + k) upper.push_back(coh.vectors[j]);
        }
        row.dim_lower = lower.size();
        row.dim_upper = upper.size();
        std::vector<Vec> images;
        for (const auto& v : lower) {
            Vec w = v;
            for (int t = 0; t < k; ++t) w = A.alg.wedge(omega, w);
            images.push_back(project(w));
        }
        row.rank = images.empty() ? 0 : Matrix::from_columns(images).rank();
        row.pass = row.dim_lower == row.dim_upper && row.rank == row.dim_lower;
        rep.rows.push_back(row);
    }
    return rep;
}

bool KahlerReport::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const AxiomResult& r) { return r.pass; });
}

KahlerReport check_kahler_identities(const GradedAlgebra& alg, const Matrix& partial,
                                     const Matrix& dbar, const InnerProduct& ip,
                                     const Vec& omega) {
    KahlerReport rep;
    auto push = [&](const std::string& name, bool ok) {
        rep.results.push_back({name, ok, ""});
    };

    Matrix d = partial + dbar;
    Matrix partial_adj = adjoint(partial, ip);
    Matrix dbar_adj = adjoint(dbar, ip);
    Matrix d_adj = adjoint(d, ip);
    Scalar i = Scalar::i();
    Matrix bv = i * (dbar_adj - partial_adj);        // Delta
    Matrix bv_adj = adjoint(bv, ip);

    push("partial_squared", (partial * partial).is_zero());
    push("dbar_squared", (dbar * dbar).is_zero());
    push("partial_dbar_anticommute", (partial * dbar + dbar * partial).is_zero());
    push("bv_adjoint_formula", bv_adj == (-i) * (dbar - partial));

    Matrix box = d * d_adj + d_adj * d;
    Matrix box_bv = bv * bv_adj + bv_adj * bv;
    Matrix box_partial = partial * partial_adj + partial_adj * partial;
    Matrix box_dbar = dbar * dbar_adj + dbar_adj * dbar;
    push("box_bv_equals_box", box_bv == box);
    push("box_equals_2box_partial", box == Scalar{2} * box_partial);
    push("box_equals_2box_dbar", box == Scalar{2} * box_dbar);
    push("d_bvadj_anticommute", (d * bv_adj + bv_adj * d).is_zero());
    push("bv_dadj_anticommute", (bv * d_adj + d_adj * bv).is_zero());

    // wedge-by-omega operator and its adjoint
    const size_t n = alg.dim();
    Matrix L(n, n);
    for (size_t c = 0; c < n; ++c) {
        Vec col = alg.wedge(omega, unit_vec(n, c));
        for (size_t r = 0; r < n; ++r) L.at(r, c) = col[r];
    }
    Matrix lambda = adjoint(L, ip);
    rep.lambda_commutator_matches = (lambda * d - d * lambda) == bv;
    return rep;
}

}  // namespace dgbv
