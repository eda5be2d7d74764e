#include "dgbv/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace dgbv {

namespace {

struct Record {
    size_t line;
    std::vector<std::string> tokens;
};

std::vector<Record> tokenize(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Record rec{lineno, {}};
        std::string tok;
        while (ls >> tok) rec.tokens.push_back(tok);
        if (!rec.tokens.empty()) out.push_back(std::move(rec));
    }
    return out;
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw ParseError{line, msg};
}

Scalar need_scalar(const Record& r, size_t pos) {
    if (pos >= r.tokens.size()) fail(r.line, "missing scalar");
    auto s = parse_scalar(r.tokens[pos]);
    if (!s) fail(r.line, "malformed scalar '" + r.tokens[pos] + "'");
    return *s;
}

long need_int(const Record& r, size_t pos) {
    if (pos >= r.tokens.size()) fail(r.line, "missing integer");
    try {
        size_t used = 0;
        long v = std::stol(r.tokens[pos], &used);
        if (used != r.tokens[pos].size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(r.line, "malformed integer '" + r.tokens[pos] + "'");
    }
}

size_t resolve_elem(const Record& r, size_t pos, const GradedBasis& basis) {
    if (pos >= r.tokens.size()) fail(r.line, "missing basis element");
    const std::string& tok = r.tokens[pos];
    if (auto idx = basis.find(tok)) return *idx;
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used == tok.size() && v >= 0 && static_cast<size_t>(v) < basis.dim())
            return static_cast<size_t>(v);
    } catch (...) {
    }
    fail(r.line, "unknown basis element '" + tok + "'");
}

void need_arity(const Record& r, size_t n) {
    if (r.tokens.size() != n)
        fail(r.line, "expected " + std::to_string(n) + " tokens, got " +
                         std::to_string(r.tokens.size()));
}

}  // namespace

LoadedModel load_model(std::istream& in, const std::string& name_hint) {
    auto records = tokenize(in);

    LoadedModel m;
    m.name = name_hint;

    // ---- phase 1: header records -------------------------------------
    size_t builder_arg = 0;
    std::vector<Record> basis_recs, wedge_recs, op_recs, opshift_recs, integral_recs,
        ip_recs, omega_recs, lie_recs, bivector_recs;
    for (const auto& r : records) {
        const std::string& kw = r.tokens[0];
        if (kw == "model") {
            need_arity(r, 2);
            m.name = r.tokens[1];
        } else if (kw == "builder") {
            need_arity(r, 3);
            if (!m.builder.empty()) fail(r.line, "duplicate builder line");
            m.builder = r.tokens[1];
            long v = need_int(r, 2);
            if (v < 1 || v > 16) fail(r.line, "builder size out of range");
            builder_arg = static_cast<size_t>(v);
            if (m.builder != "exterior" && m.builder != "lie" &&
                m.builder != "complex_torus")
                fail(r.line, "unknown builder '" + m.builder + "'");
        } else if (kw == "basis") {
            basis_recs.push_back(r);
        } else if (kw == "wedge") {
            wedge_recs.push_back(r);
        } else if (kw == "op") {
            op_recs.push_back(r);
        } else if (kw == "opshift") {
            opshift_recs.push_back(r);
        } else if (kw == "integral") {
            integral_recs.push_back(r);
        } else if (kw == "ip") {
            ip_recs.push_back(r);
        } else if (kw == "omega") {
            omega_recs.push_back(r);
        } else if (kw == "lie") {
            lie_recs.push_back(r);
        } else if (kw == "bivector") {
            bivector_recs.push_back(r);
        } else {
            fail(r.line, "unknown keyword '" + kw + "'");
        }
    }

    // ---- phase 2: algebra assembly -----------------------------------
    bool default_integral = true;
    if (m.builder == "exterior" || m.builder == "lie") {
        size_t gens = builder_arg;
        if (m.builder == "exterior") {
            if (!lie_recs.empty() || !bivector_recs.empty())
                fail(lie_recs.empty() ? bivector_recs[0].line : lie_recs[0].line,
                     "lie/bivector lines require builder lie");
            m.A.alg = exterior_algebra(gens);
            size_t n = m.A.alg.dim();
            m.A.delta = Matrix(n, n);
            m.A.bvop = Matrix(n, n);
            m.A.integral = Vec(n);
            m.A.integral[n - 1] = Scalar::one();
        } else {
            LieAlgebraData g = LieAlgebraData::abelian(gens);
            std::set<std::pair<size_t, size_t>> seen;
            for (const auto& r : lie_recs) {
                need_arity(r, 5);
                long k = need_int(r, 1), i = need_int(r, 2), j = need_int(r, 3);
                auto in_range = [&](long v) {
                    return v >= 1 && static_cast<size_t>(v) <= gens;
                };
                if (!in_range(k) || !in_range(i) || !in_range(j))
                    fail(r.line, "lie generator index out of range (1-based)");
                if (i == j) fail(r.line, "lie bracket of a generator with itself");
                size_t a = std::min(i, j), b = std::max(i, j);
                if (!seen.insert({a * 100 + b, static_cast<size_t>(k)}).second)
                    fail(r.line, "duplicate lie entry");
                Scalar c = need_scalar(r, 4);
                if (i > j) c = -c;
                g.set(static_cast<size_t>(k - 1), a - 1, b - 1, c);
            }
            CeModel ce;
            try {
                ce = chevalley_eilenberg_model(g);
            } catch (const std::exception& e) {
                throw ValidationError{e.what()};
            }
            m.A.alg = ce.alg;
            m.A.delta = ce.d;
            m.A.integral = ce.integral;
            m.A.bvop = Matrix(m.A.alg.dim(), m.A.alg.dim());
            if (!bivector_recs.empty()) {
                std::vector<std::tuple<size_t, size_t, Scalar>> terms;
                for (const auto& r : bivector_recs) {
                    need_arity(r, 4);
                    long i = need_int(r, 1), j = need_int(r, 2);
                    if (i < 1 || j < 1 || static_cast<size_t>(i) > gens ||
                        static_cast<size_t>(j) > gens || i == j)
                        fail(r.line, "bivector generator index out of range (1-based)");
                    terms.emplace_back(static_cast<size_t>(i - 1),
                                       static_cast<size_t>(j - 1), need_scalar(r, 3));
                }
                m.bivector = bivector_element(gens, terms);
                KoszulResult kz = koszul_delta(m.A.alg, m.A.delta, g, *m.bivector);
                if (!kz.poisson)
                    throw ValidationError{"bivector is not Poisson ([w, w] != 0)"};
                if (!kz.ok())
                    throw ValidationError{"Koszul operator fails its identities"};
                m.A.bvop = kz.bv;
            }
        }
    } else if (m.builder == "complex_torus") {
        if (!basis_recs.empty() || !wedge_recs.empty())
            fail(basis_recs.empty() ? wedge_recs[0].line : basis_recs[0].line,
                 "complex_torus builder takes no basis/wedge lines");
        m.bigraded = bigraded_kahler_model(builder_arg);
        m.A = dolbeault_dgbv(*m.bigraded);
        m.ip = m.bigraded->ip;
        m.omega = m.bigraded->omega;
    } else {
        // explicit basis
        if (basis_recs.empty()) fail(1, "model needs a builder or basis lines");
        std::set<std::string> names;
        for (const auto& r : basis_recs) {
            BasisElement e;
            if (r.tokens.size() == 4 && r.tokens[2] == "degree") {
                e.name = r.tokens[1];
                e.degree = static_cast<int>(need_int(r, 3));
            } else if (r.tokens.size() == 5 && r.tokens[2] == "bidegree") {
                e.name = r.tokens[1];
                int p = static_cast<int>(need_int(r, 3));
                int q = static_cast<int>(need_int(r, 4));
                e.degree = p + q;
                e.bidegree = {p, q};
            } else {
                fail(r.line, "basis line: basis <name> degree <d> | bidegree <p> <q>");
            }
            if (!names.insert(e.name).second) fail(r.line, "duplicate basis name");
            m.A.alg.basis.elems.push_back(std::move(e));
        }
        if (m.A.alg.basis.degree(0) != 0) fail(basis_recs[0].line, "first basis element must be the degree-0 unit");
        size_t n = m.A.alg.dim();
        m.A.alg.table.assign(n, std::vector<Vec>(n, Vec(n)));
        for (size_t j = 0; j < n; ++j) {
            m.A.alg.table[0][j][j] = Scalar::one();
            m.A.alg.table[j][0][j] = Scalar::one();
        }
        m.A.delta = Matrix(n, n);
        m.A.bvop = Matrix(n, n);
        m.A.integral = Vec(n);
        std::set<std::tuple<size_t, size_t, size_t>> seen;
        for (const auto& r : wedge_recs) {
            need_arity(r, 5);
            size_t i = resolve_elem(r, 1, m.A.alg.basis);
            size_t j = resolve_elem(r, 2, m.A.alg.basis);
            size_t k = resolve_elem(r, 3, m.A.alg.basis);
            if (i == 0 || j == 0)
                fail(r.line, "unit products are implicit; wedge indices must be nonzero");
            if (!seen.insert({i, j, k}).second) fail(r.line, "duplicate wedge entry");
            m.A.alg.table[i][j][k] = need_scalar(r, 4);
        }
    }

    const size_t n = m.A.alg.dim();

    // ---- phase 3: overlays (ops, shifts, integral, ip, omega) ---------
    if (m.builder != "complex_torus" || op_recs.empty()) {
        std::set<std::pair<std::string, std::pair<size_t, size_t>>> seen_op;
        for (const auto& r : op_recs) {
            need_arity(r, 5);
            const std::string& which = r.tokens[1];
            Matrix* target = which == "delta" ? &m.A.delta
                           : which == "bvop" ? &m.A.bvop
                                             : nullptr;
            if (!target) fail(r.line, "op name must be delta or bvop");
            size_t row = resolve_elem(r, 2, m.A.alg.basis);
            size_t col = resolve_elem(r, 3, m.A.alg.basis);
            if (!seen_op.insert({which, {row, col}}).second)
                fail(r.line, "duplicate op entry");
            target->at(row, col) = need_scalar(r, 4);
        }
    } else {
        fail(op_recs[0].line, "complex_torus builder takes no op lines");
    }
    for (const auto& r : opshift_recs) {
        need_arity(r, 3);
        if (r.tokens[1] == "delta") m.A.delta_shift = static_cast<int>(need_int(r, 2));
        else if (r.tokens[1] == "bvop") m.A.bvop_shift = static_cast<int>(need_int(r, 2));
        else fail(r.line, "opshift name must be delta or bvop");
    }
    if (!integral_recs.empty()) {
        if (default_integral) m.A.integral = Vec(n);
        std::set<size_t> seen;
        for (const auto& r : integral_recs) {
            need_arity(r, 3);
            size_t e = resolve_elem(r, 1, m.A.alg.basis);
            if (!seen.insert(e).second) fail(r.line, "duplicate integral entry");
            m.A.integral[e] = need_scalar(r, 2);
        }
    }
    if (!ip_recs.empty()) {
        m.ip.gram = Matrix(n, n);
        std::set<std::pair<size_t, size_t>> seen;
        for (const auto& r : ip_recs) {
            need_arity(r, 4);
            size_t i = resolve_elem(r, 1, m.A.alg.basis);
            size_t j = resolve_elem(r, 2, m.A.alg.basis);
            if (!seen.insert({i, j}).second) fail(r.line, "duplicate ip entry");
            m.ip.gram.at(i, j) = need_scalar(r, 3);
        }
    } else if (m.builder != "complex_torus") {
        m.ip = InnerProduct::standard(n);
    }
    if (!omega_recs.empty()) {
        Vec w(n);
        std::set<size_t> seen;
        for (const auto& r : omega_recs) {
            need_arity(r, 3);
            size_t e = resolve_elem(r, 1, m.A.alg.basis);
            if (!seen.insert(e).second) fail(r.line, "duplicate omega entry");
            w[e] = need_scalar(r, 2);
        }
        m.omega = w;
    }
    if (m.name.empty()) m.name = "unnamed";
    return m;
}

LoadedModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError{0, "cannot open '" + path + "'"};
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return load_model(in, name);
}

std::string dump_model(const LoadedModel& m) {
    std::ostringstream out;
    const GradedBasis& basis = m.A.alg.basis;
    const size_t n = basis.dim();
    out << "model " << m.name << "\n";
    for (size_t i = 0; i < n; ++i) {
        const BasisElement& e = basis.elems[i];
        out << "basis " << e.name;
        if (e.bidegree)
            out << " bidegree " << e.bidegree->first << " " << e.bidegree->second;
        else
            out << " degree " << e.degree;
        out << "\n";
    }
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!m.A.alg.table[i][j][k].is_zero())
                    out << "wedge " << basis.elems[i].name << " " << basis.elems[j].name
                        << " " << basis.elems[k].name << " "
                        << to_string(m.A.alg.table[i][j][k]) << "\n";
    out << "opshift delta " << m.A.delta_shift << "\n";
    out << "opshift bvop " << m.A.bvop_shift << "\n";
    for (const char* which : {"delta", "bvop"}) {
        const Matrix& f = std::string(which) == "delta" ? m.A.delta : m.A.bvop;
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (!f.at(r, c).is_zero())
                    out << "op " << which << " " << basis.elems[r].name << " "
                        << basis.elems[c].name << " " << to_string(f.at(r, c)) << "\n";
    }
    for (size_t i = 0; i < n; ++i)
        if (!m.A.integral[i].is_zero())
            out << "integral " << basis.elems[i].name << " " << to_string(m.A.integral[i])
                << "\n";
    if (m.ip.gram != Matrix::identity(n))
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (!m.ip.gram.at(r, c).is_zero())
                    out << "ip " << basis.elems[r].name << " " << basis.elems[c].name
                        << " " << to_string(m.ip.gram.at(r, c)) << "\n";
    if (m.omega)
        for (size_t i = 0; i < n; ++i)
            if (!(*m.omega)[i].is_zero())
                out << "omega " << basis.elems[i].name << " " << to_string((*m.omega)[i])
                    << "\n";
    return out.str();
}

std::optional<Vec> parse_element_spec(const std::string& spec, const GradedBasis& basis) {
    Vec v(basis.dim());
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto colon = part.find(':');
        std::string name = part.substr(0, colon);
        auto idx = basis.find(name);
        if (!idx) return std::nullopt;
        Scalar c = Scalar::one();
        if (colon != std::string::npos) {
            auto s = parse_scalar(part.substr(colon + 1));
            if (!s) return std::nullopt;
            c = *s;
        }
        v[*idx] += c;
    }
    return v;
}

std::string monomial_to_string(const SuperMonomial& m) {
    std::string out;
    for (size_t j = 0; j < m.exp.size(); ++j) {
        if (m.exp[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(j);
        if (m.exp[j] > 1) out += "^" + std::to_string(m.exp[j]);
    }
    return out.empty() ? "1" : out;
}

std::optional<SuperMonomial> monomial_from_string(const std::string& text, size_t nvars) {
    SuperMonomial m = SuperMonomial::one(nvars);
    if (text == "1") return m;
    if (text.empty()) return std::nullopt;
    std::istringstream in(text);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        if (factor.empty() || factor[0] != 'x') return std::nullopt;
        auto caret = factor.find('^');
        std::string var = factor.substr(1, caret == std::string::npos
                                               ? std::string::npos
                                               : caret - 1);
        int exp = 1;
        try {
            size_t used = 0;
            long j = std::stol(var, &used);
            if (used != var.size() || j < 0 || static_cast<size_t>(j) >= nvars)
                return std::nullopt;
            if (caret != std::string::npos) {
                std::string es = factor.substr(caret + 1);
                exp = static_cast<int>(std::stol(es, &used));
                if (used != es.size() || exp < 1) return std::nullopt;
            }
            if (m.exp[j] != 0) return std::nullopt;  // repeated variable
            m.exp[j] = exp;
        } catch (...) {
            return std::nullopt;
        }
    }
    return m;
}

std::string dump_solution(const std::string& model_name, const MCSolution& sol,
                          const GradedBasis& basis) {
    std::ostringstream out;
    out << "solution " << model_name << "\n";
    out << "order " << sol.order << "\n";
    out << "parities";
    for (int p : sol.vars.parity) out << " " << p;
    out << "\n";
    for (size_t j = 0; j < sol.classes.size(); ++j)
        for (size_t i = 0; i < sol.classes[j].size(); ++i)
            if (!sol.classes[j][i].is_zero())
                out << "class " << j << " " << basis.elems[i].name << " "
                    << to_string(sol.classes[j][i]) << "\n";
    for (size_t t = 0; t < sol.terms.size(); ++t)
        for (const auto& [mono, vec] : sol.terms[t])
            for (size_t i = 0; i < vec.size(); ++i)
                if (!vec[i].is_zero())
                    out << "term " << (t + 1) << " " << monomial_to_string(mono) << " "
                        << basis.elems[i].name << " " << to_string(vec[i]) << "\n";
    return out.str();
}

MCSolution parse_solution(std::istream& in, const GradedBasis& basis) {
    MCSolution sol;
    size_t h = 0;
    for (const Record& r : tokenize(in)) {
        const std::string& kw = r.tokens[0];
        if (kw == "solution") {
            need_arity(r, 2);
        } else if (kw == "order") {
            need_arity(r, 2);
            sol.order = static_cast<int>(need_int(r, 1));
            if (sol.order < 1) fail(r.line, "order must be >= 1");
            sol.terms.assign(static_cast<size_t>(sol.order), SuperPolynomial{});
        } else if (kw == "parities") {
            for (size_t p = 1; p < r.tokens.size(); ++p)
                sol.vars.parity.push_back(static_cast<int>(need_int(r, p)) & 1);
            h = sol.vars.count();
            sol.classes.assign(h, zero_vec(basis.dim()));
        } else if (kw == "class") {
            need_arity(r, 4);
            size_t j = static_cast<size_t>(need_int(r, 1));
            if (j >= h) fail(r.line, "class index out of range");
            sol.classes[j][resolve_elem(r, 2, basis)] = need_scalar(r, 3);
        } else if (kw == "term") {
            need_arity(r, 5);
            long t = need_int(r, 1);
            if (t < 1 || t > sol.order) fail(r.line, "term order out of range");
            auto mono = monomial_from_string(r.tokens[2], h);
            if (!mono) fail(r.line, "malformed monomial '" + r.tokens[2] + "'");
            SuperPolynomial& term = sol.terms[static_cast<size_t>(t - 1)];
            auto [it, fresh] = term.try_emplace(*mono, zero_vec(basis.dim()));
            (void)fresh;
            it->second[resolve_elem(r, 3, basis)] = need_scalar(r, 4);
        } else {
            fail(r.line, "unknown keyword '" + kw + "'");
        }
    }
    if (sol.order == 0) fail(0, "missing order line");
    return sol;
}

std::string dump_frobenius(const std::string& model_name, const FrobeniusData& F) {
    std::ostringstream out;
    out << "frobenius " << model_name << "\n";
    out << "classes " << F.h << "\n";
    out << "trusted_order " << F.trusted_order << "\n";
    out << "parities";
    for (int p : F.class_parity) out << " " << p;
    out << "\n";
    for (size_t i = 0; i < F.h; ++i)
        for (size_t j = 0; j < F.h; ++j)
            if (!F.metric.at(i, j).is_zero())
                out << "g " << i << " " << j << " " << to_string(F.metric.at(i, j))
                    << "\n";
    for (size_t i = 0; i < F.h; ++i)
        for (size_t j = 0; j < F.h; ++j)
            for (size_t k = 0; k < F.h; ++k)
                for (const auto& [mono, c] : F.at(i, j, k))
                    if (!c.is_zero())
                        out << "c " << i << " " << j << " " << k << " "
                            << monomial_to_string(mono) << " " << to_string(c) << "\n";
    return out.str();
}

// ---- JSON -------------------------------------------------------------

Json kpoly_json(const ScalarPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p) {
        if (c.is_zero()) continue;
        out.push_back({{"monomial", monomial_to_string(m)}, {"coeff", to_string(c)}});
    }
    return out;
}

Json poly_json(const SuperPolynomial& p, const GradedBasis& basis) {
    Json out = Json::array();
    for (const auto& [m, v] : p)
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero())
                out.push_back({{"monomial", monomial_to_string(m)},
                               {"element", basis.elems[i].name},
                               {"coeff", to_string(v[i])}});
    return out;
}

Json axiom_report_json(const AxiomReport& r) {
    Json out;
    out["all_pass"] = r.all_pass();
    Json items = Json::array();
    for (const auto& a : r.results) {
        Json item = {{"name", a.name}, {"pass", a.pass}};
        if (!a.pass) item["witness"] = a.witness;
        items.push_back(item);
    }
    out["axioms"] = items;
    return out;
}

Json integral_report_json(const IntegralReport& r) {
    Json out;
    out["is_integral"] = r.is_integral;
    out["is_nice"] = r.is_nice;
    out["h_dim"] = r.h_dim;
    out["pairing_rank"] = r.pairing_rank;
    if (!r.witness.empty()) out["witness"] = r.witness;
    return out;
}

Json condition_report_json(const ConditionReport& r) {
    Json out;
    out["cond_a"] = r.cond_a;
    out["cond_b"] = r.cond_b;
    out["cond_c"] = r.cond_c;
    out["conditions_hold"] = r.conditions_hold();
    out["internally_consistent"] = r.internally_consistent();
    out["dims"] = {{"im_delta_bv", r.dim_im_delta_bv},
                   {"im_bv_delta", r.dim_im_bv_delta},
                   {"im_delta_cap_ker_bv", r.dim_imd_kerbv},
                   {"im_bv_cap_ker_delta", r.dim_imbv_kerd},
                   {"joint_cut", r.dim_joint_cut},
                   {"h_delta", r.dim_h_delta},
                   {"h_bv", r.dim_h_bv},
                   {"joint_quotient", r.dim_joint_quotient}};
    return out;
}

Json solution_json(const MCSolution& sol, const GradedBasis& basis,
                   const McVerification& v, bool analytic) {
    Json out;
    out["order"] = sol.order;
    out["classes"] = sol.classes.size();
    out["mode"] = analytic ? "analytic" : "normalized";
    Json terms = Json::array();
    for (size_t t = 0; t < sol.terms.size(); ++t) {
        Json item;
        item["order"] = t + 1;
        item["monomials"] = sol.terms[t].size();
        if (t >= 1 && t - 1 < sol.certs.size()) {
            const NormalizationCert& c = sol.certs[t - 1];
            item["cert"] = {{"in_im_bv", c.in_im_bv},
                            {"in_im_homotopy_bv", c.in_im_homotopy_bv},
                            {"bv_closed", c.bv_closed},
                            {"even_total_parity", c.even_total_parity},
                            {"no_x0", c.no_x0}};
        }
        item["value"] = poly_json(sol.terms[t], basis);
        terms.push_back(item);
    }
    out["terms"] = terms;
    out["verify"] = {{"residual_zero", v.residual_zero},
                     {"bv_closed", v.bv_closed},
                     {"x0_confined", v.x0_confined},
                     {"parity_ok", v.parity_ok}};
    out["all_certified"] = sol.all_certified(analytic);
    return out;
}

Json obstruction_json(const ObstructionReport& ob, const GradedBasis& basis) {
    Json out;
    out["order"] = ob.order;
    out["detail"] = ob.detail;
    out["harmonic_witness"] = poly_json(ob.harmonic_witness, basis);
    out["rhs"] = poly_json(ob.rhs, basis);
    return out;
}

Json frobenius_json(const FrobeniusData& F, const TensorCheck& sym,
                    const TensorCheck& assoc, const TensorCheck& integ,
                    const TensorCheck& metric_const) {
    Json out;
    out["classes"] = F.h;
    out["trusted_order"] = F.trusted_order;
    Json g = Json::array();
    for (size_t i = 0; i < F.h; ++i)
        for (size_t j = 0; j < F.h; ++j)
            if (!F.metric.at(i, j).is_zero())
                g.push_back({{"i", i}, {"j", j}, {"value", to_string(F.metric.at(i, j))}});
    out["metric"] = g;
    Json c = Json::array();
    for (size_t i = 0; i < F.h; ++i)
        for (size_t j = 0; j < F.h; ++j)
            for (size_t k = 0; k < F.h; ++k)
                if (!F.at(i, j, k).empty())
                    c.push_back({{"i", i},
                                 {"j", j},
                                 {"k", k},
                                 {"value", kpoly_json(F.at(i, j, k))}});
    out["product_tensor"] = c;
    auto check = [](const TensorCheck& t) {
        Json j = {{"pass", t.pass}};
        if (!t.pass) j["witness"] = t.witness;
        return j;
    };
    out["checks"] = {{"metric_constancy", check(metric_const)},
                     {"symmetry", check(sym)},
                     {"associativity", check(assoc)},
                     {"potential_integrability", check(integ)}};
    return out;
}

Json lefschetz_json(const LefschetzReport& r) {
    Json out;
    out["omega_closed"] = r.omega_closed;
    out["all_pass"] = r.all_pass();
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"k", row.k},
                        {"dim_lower", row.dim_lower},
                        {"dim_upper", row.dim_upper},
                        {"rank", row.rank},
                        {"pass", row.pass}});
    out["rows"] = rows;
    return out;
}

Json compare_json(const CompareReport& r) {
    Json out;
    out["kahler_ok"] = r.kahler_ok;
    out["lambda_commutator_matches"] = r.lambda_commutator_matches;
    out["simultaneous"] = {{"ok", r.sim.ok},
                           {"dolbeault_residual_zero", r.sim.dolbeault_residual_zero},
                           {"mirror_residual_zero", r.sim.mirror_residual_zero},
                           {"derham_residual_zero", r.sim.derham_residual_zero},
                           {"real", r.sim.real}};
    out["metrics_equal"] = r.metrics_equal;
    out["tensors_equal"] = r.tensors_equal;
    out["ring_at_origin"] = r.ring_at_origin;
    out["identified"] = r.identified();
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

}  // namespace dgbv
