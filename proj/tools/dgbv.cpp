// Command-line front end for the exact dGBV / Maurer-Cartan / Frobenius
// engine.  Exit codes: 0 success, 1 validation failure, 2 obstruction,
// 3 I/O or parse error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dgbv/io.hpp"

using namespace dgbv;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kObstruction = 2;
constexpr int kIo = 3;

struct Output {
    std::string format = "text";  // text | machine
    std::string path;             // empty = stdout

    void emit(const std::string& text, const Json& machine) const {
        const std::string& body =
            format == "machine" ? machine.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path);
            if (!out) {
                std::cerr << "cannot write '" << path << "'\n";
                std::exit(kIo);
            }
            out << body;
        }
    }
};

LoadedModel load_or_exit(const std::string& path) {
    try {
        return load_model_file(path);
    } catch (const ParseError& e) {
        std::cerr << path << ":" << e.line << ": parse error: " << e.message << "\n";
        std::exit(kIo);
    } catch (const ValidationError& e) {
        std::cerr << path << ": invalid model: " << e.message << "\n";
        std::exit(kValidation);
    }
}

struct CheckOutcome {
    AxiomReport axioms;
    IntegralReport integral;
    ConditionReport conditions;
    bool pass = false;
};

CheckOutcome run_checks(const LoadedModel& m) {
    CheckOutcome out;
    out.axioms = check_axioms(m.A);
    out.integral = check_integral(m.A);
    out.conditions = check_lemma_conditions(m.A);
    out.pass = out.axioms.all_pass() && out.integral.is_integral &&
               out.integral.is_nice && out.conditions.conditions_hold();
    return out;
}

std::string check_text(const LoadedModel& m, const CheckOutcome& c) {
    std::ostringstream out;
    out << "model " << m.name << " (dim " << m.A.dim() << ")\n";
    out << "axioms: " << (c.axioms.all_pass() ? "pass" : "FAIL") << "\n";
    for (const auto& a : c.axioms.results)
        if (!a.pass) out << "  " << a.name << ": FAIL (" << a.witness << ")\n";
    out << "integral: " << (c.integral.is_integral ? "pass" : "FAIL")
        << ", nice: " << (c.integral.is_nice ? "yes" : "NO") << " (dim H = "
        << c.integral.h_dim << ", pairing rank " << c.integral.pairing_rank << ")\n";
    out << "conditions: (A) " << (c.conditions.cond_a ? "pass" : "FAIL") << ", (B) "
        << (c.conditions.cond_b ? "pass" : "FAIL") << ", (C) "
        << (c.conditions.cond_c ? "pass" : "FAIL") << "\n";
    out << "  dim(Im delta cap Ker Delta) = " << c.conditions.dim_imd_kerbv
        << ", dim(Im delta Delta) = " << c.conditions.dim_im_delta_bv << "\n";
    out << "  dim(Im Delta cap Ker delta) = " << c.conditions.dim_imbv_kerd
        << ", dim(Im Delta delta) = " << c.conditions.dim_im_bv_delta << "\n";
    out << "  dim H(delta) = " << c.conditions.dim_h_delta << ", dim H(Delta) = "
        << c.conditions.dim_h_bv << "\n";
    out << "verdict: " << (c.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

Json check_json(const LoadedModel& m, const CheckOutcome& c) {
    Json j;
    j["model"] = m.name;
    j["dim"] = m.A.dim();
    j["axioms"] = axiom_report_json(c.axioms);
    j["integral"] = integral_report_json(c.integral);
    j["conditions"] = condition_report_json(c.conditions);
    j["pass"] = c.pass;
    return j;
}

// Harmonic classes that are also Delta-closed; on condition-passing models
// this is the whole cohomology basis.
std::vector<Vec> harmonic_classes_or_exit(const LoadedModel& m, size_t* dropped) {
    CohomologyBasis coh = cohomology_basis(m.A, m.ip);
    if (!coh.unit_harmonic) {
        std::cerr << "unit is not harmonic; cannot seed the solver\n";
        std::exit(kValidation);
    }
    std::vector<Vec> classes;
    for (size_t j = 0; j < coh.vectors.size(); ++j)
        if (coh.in_joint_kernel[j]) classes.push_back(coh.vectors[j]);
    *dropped = coh.vectors.size() - classes.size();
    return classes;
}

int cmd_solve_impl(const LoadedModel& m, int order, const std::string& mode, bool force,
                   const Output& out, bool frobenius_stage, bool round_trip) {
    CheckOutcome checks = run_checks(m);
    if (!checks.pass && !force) {
        out.emit(check_text(m, checks) + "refusing to solve; pass --force to override\n",
                 check_json(m, checks));
        return kValidation;
    }

    size_t dropped = 0;
    std::vector<Vec> classes = harmonic_classes_or_exit(m, &dropped);
    if (dropped > 0)
        std::cerr << "note: " << dropped
                  << " harmonic class(es) are not Delta-closed and were not seeded\n";
    SolveOptions opt;
    opt.order = order;
    opt.analytic = mode != "normalized";

    SolveResult res = [&]() -> SolveResult {
        try {
            return solve(m.A, m.ip, classes, opt);
        } catch (const std::exception& e) {
            std::cerr << "solve: " << e.what() << "\n";
            std::exit(kValidation);
        }
    }();

    if (auto* ob = std::get_if<ObstructionReport>(&res)) {
        std::ostringstream text;
        text << "OBSTRUCTED at order " << ob->order << ": " << ob->detail << "\n";
        for (const auto& [mono, v] : ob->harmonic_witness)
            for (size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero())
                    text << "  witness " << monomial_to_string(mono) << " * "
                         << m.A.alg.basis.elems[i].name << " : " << to_string(v[i])
                         << "\n";
        Json j;
        j["model"] = m.name;
        j["obstruction"] = obstruction_json(*ob, m.A.alg.basis);
        out.emit(text.str(), j);
        return kObstruction;
    }

    const MCSolution& sol = std::get<MCSolution>(res);
    McVerification v = verify_mc(sol, m.A);
    std::string dump = dump_solution(m.name, sol, m.A.alg.basis);

    bool rt_ok = true;
    if (round_trip) {
        std::istringstream in(dump);
        try {
            MCSolution re = parse_solution(in, m.A.alg.basis);
            McVerification rv = verify_mc(re, m.A);
            rt_ok = rv.valid() && dump_solution(m.name, re, m.A.alg.basis) == dump;
        } catch (const ParseError& e) {
            rt_ok = false;
            std::cerr << "solution round trip: line " << e.line << ": " << e.message
                      << "\n";
        }
    }

    bool certified = sol.all_certified(opt.analytic);
    bool ok = v.valid() && certified && rt_ok;

    if (!frobenius_stage) {
        std::ostringstream text;
        text << "solved " << m.name << " to order " << sol.order << " ("
             << sol.classes.size() << " classes, mode "
             << (opt.analytic ? "analytic" : "normalized") << ")\n";
        text << "residual zero: " << (v.residual_zero ? "yes" : "NO")
             << ", Delta-closed: " << (v.bv_closed ? "yes" : "NO")
             << ", x0 confined: " << (v.x0_confined ? "yes" : "NO")
             << ", parity: " << (v.parity_ok ? "ok" : "BAD") << "\n";
        text << "normalization certificates: " << (certified ? "all pass" : "FAIL")
             << "\n";
        if (round_trip)
            text << "dump round trip: " << (rt_ok ? "bit-exact" : "FAIL") << "\n";
        text << dump;
        Json j;
        j["model"] = m.name;
        j["solution"] = solution_json(sol, m.A.alg.basis, v, opt.analytic);
        j["round_trip_exact"] = rt_ok;
        j["pass"] = ok;
        out.emit(text.str(), j);
        return ok ? kOk : kValidation;
    }

    // frobenius stage
    FrobeniusData F;
    try {
        F = product_tensor(sol, m.A);
    } catch (const std::exception& e) {
        std::cerr << "frobenius: " << e.what() << "\n";
        return kValidation;
    }
    TensorCheck metric_const = metric_constancy_check(sol, m.A);
    TensorCheck sym = check_tensor_symmetry(F);
    TensorCheck assoc = check_associativity(F);
    TensorCheck integ = check_potential_integrability(F);
    bool fok = ok && metric_const.pass && sym.pass && assoc.pass && integ.pass;

    std::ostringstream text;
    text << "frobenius data for " << m.name << " (trusted through order "
         << F.trusted_order << ")\n";
    text << "metric constancy: " << (metric_const.pass ? "pass" : "FAIL")
         << ", symmetry: " << (sym.pass ? "pass" : "FAIL")
         << ", associativity: " << (assoc.pass ? "pass" : "FAIL")
         << ", integrability: " << (integ.pass ? "pass" : "FAIL") << "\n";
    text << dump_frobenius(m.name, F);
    Json j;
    j["model"] = m.name;
    j["solution"] = solution_json(sol, m.A.alg.basis, v, opt.analytic);
    j["frobenius"] = frobenius_json(F, sym, assoc, integ, metric_const);
    j["pass"] = fok;
    out.emit(text.str(), j);
    return fok ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dGBV algebra engine: axiom checking, Maurer-Cartan "
                 "solving, Frobenius data extraction"};
    app.require_subcommand(1);

    std::string model_path;
    Output out;
    int order = 4;
    std::string mode = "analytic";
    bool force = false;
    std::string omega_spec;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("model", model_path, "model file")->required();
        cmd->add_option("--output", out.path, "write the report to a file");
        cmd->add_option("--format", out.format, "text|machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    CLI::App* c_check = app.add_subcommand("check", "verify axioms, integral, conditions");
    add_common(c_check);

    CLI::App* c_solve = app.add_subcommand("solve", "solve Maurer-Cartan order by order");
    add_common(c_solve);
    c_solve->add_option("--order", order, "truncation order N");
    c_solve->add_option("--mode", mode, "analytic|normalized")
        ->check(CLI::IsMember({"analytic", "normalized"}));
    c_solve->add_flag("--force", force, "solve even when checks fail");

    CLI::App* c_frob = app.add_subcommand("frobenius", "extract metric and product tensor");
    add_common(c_frob);
    c_frob->add_option("--order", order, "truncation order N");
    c_frob->add_flag("--force", force, "solve even when checks fail");

    CLI::App* c_cmp = app.add_subcommand("compare", "de Rham vs Dolbeault identification");
    add_common(c_cmp);
    c_cmp->add_option("--order", order, "truncation order N");

    CLI::App* c_lef = app.add_subcommand("lefschetz", "hard Lefschetz rank table");
    add_common(c_lef);
    c_lef->add_option("--omega", omega_spec,
                      "omega class as name:scalar,name:scalar (default: model omega)");

    CLI11_PARSE(app, argc, argv);

    LoadedModel m = load_or_exit(model_path);

    if (c_check->parsed()) {
        CheckOutcome c = run_checks(m);
        out.emit(check_text(m, c), check_json(m, c));
        return c.pass ? kOk : kValidation;
    }

    if (c_solve->parsed())
        return cmd_solve_impl(m, order, mode, force, out, false, true);

    if (c_frob->parsed())
        return cmd_solve_impl(m, order, mode, force, out, true, false);

    if (c_cmp->parsed()) {
        if (!m.bigraded) {
            std::cerr << "compare requires a bigraded (complex_torus) model\n";
            return kValidation;
        }
        CompareReport rep = compare_structures(*m.bigraded, order);
        std::ostringstream text;
        text << "comparison for " << m.name << " at order " << order << "\n";
        text << "Kaehler identities: " << (rep.kahler_ok ? "pass" : "FAIL")
             << " ([Lambda, d] = Delta: "
             << (rep.lambda_commutator_matches ? "matches" : "MISMATCH") << ")\n";
        if (rep.kahler_ok) {
            text << "simultaneous solution: " << (rep.sim.ok ? "valid" : "FAIL")
                 << " (real: " << (rep.sim.real ? "yes" : "NO") << ")\n";
            text << "metric equality: " << (rep.metrics_equal ? "yes" : "NO")
                 << ", tensor equality: " << (rep.tensors_equal ? "yes" : "NO")
                 << ", ring at x=0: " << (rep.ring_at_origin ? "matches" : "MISMATCH")
                 << "\n";
            if (rep.sim.ok) {
                text << "--- Dolbeault tensors ---\n"
                     << dump_frobenius(m.name, rep.dolbeault_data);
                text << "--- de Rham tensors ---\n"
                     << dump_frobenius(m.name, rep.derham_data);
            }
        }
        if (!rep.error.empty()) text << "error: " << rep.error << "\n";
        text << "verdict: " << (rep.identified() ? "IDENTICAL" : "NOT IDENTIFIED")
             << "\n";
        Json j;
        j["model"] = m.name;
        j["compare"] = compare_json(rep);
        out.emit(text.str(), j);
        return rep.identified() ? kOk : kValidation;
    }

    if (c_lef->parsed()) {
        std::optional<Vec> omega = m.omega;
        if (!omega_spec.empty()) {
            omega = parse_element_spec(omega_spec, m.A.alg.basis);
            if (!omega) {
                std::cerr << "malformed --omega spec\n";
                return kIo;
            }
        }
        if (!omega) {
            std::cerr << "no omega class: give --omega or add omega lines to the model\n";
            return kValidation;
        }
        LefschetzReport rep = hard_lefschetz_check(m.A, m.ip, *omega);
        std::ostringstream text;
        text << "hard Lefschetz for " << m.name << "\n";
        text << "omega closed: " << (rep.omega_closed ? "yes" : "NO") << "\n";
        for (const auto& row : rep.rows)
            text << "  k=" << row.k << ": dim " << row.dim_lower << " -> dim "
                 << row.dim_upper << ", rank " << row.rank << " "
                 << (row.pass ? "pass" : "FAIL") << "\n";
        text << "verdict: " << (rep.omega_closed && rep.all_pass() ? "PASS" : "FAIL")
             << "\n";
        Json j;
        j["model"] = m.name;
        j["lefschetz"] = lefschetz_json(rep);
        out.emit(text.str(), j);
        return rep.omega_closed && rep.all_pass() ? kOk : kValidation;
    }

    return kIo;
}
