#pragma once

#include <istream>
#include <optional>
#include <string>

#include "dgbv/frobenius.hpp"
#include "dgbv/models.hpp"

#include "json.hpp"

namespace dgbv {

using Json = nlohmann::ordered_json;

/// Parse failure with a 1-based line number.
struct ParseError {
    size_t line = 0;
    std::string message;
};

/// Model-level failure (bad builder data, inadmissible bivector, ...).
struct ValidationError {
    std::string message;
};

/// A fully assembled model: the dGBV algebra plus the optional extras used by
/// individual subcommands.  `bigraded` is populated by the complex_torus
/// builder only.
struct LoadedModel {
    std::string name;
    DgbvAlgebra A;
    InnerProduct ip;
    std::optional<Vec> omega;
    std::optional<Vec> bivector;  // polyvector element (builder lie)
    std::optional<BigradedModel> bigraded;
    std::string builder;  // "", "exterior", "lie", "complex_torus"
};

/// Parses the declarative sparse model format (grammar in docs/model-format.md).
/// Throws ParseError / ValidationError.
LoadedModel load_model(std::istream& in, const std::string& name_hint = "");
LoadedModel load_model_file(const std::string& path);

/// Re-emits the assembled model in the explicit (builder-free) format;
/// load_model(dump_model(m)) reproduces the same algebra, operators,
/// integral, inner product, and omega bit-exactly.
std::string dump_model(const LoadedModel& m);

/// Element reference used on the command line: "name:scalar,name:scalar,...".
std::optional<Vec> parse_element_spec(const std::string& spec, const GradedBasis& basis);

/// Sparse text dump of a solution; parse_solution round-trips bit-exactly.
std::string dump_solution(const std::string& model_name, const MCSolution& sol,
                          const GradedBasis& basis);
MCSolution parse_solution(std::istream& in, const GradedBasis& basis);

/// Sparse text dump of the Frobenius tensors.
std::string dump_frobenius(const std::string& model_name, const FrobeniusData& F);

std::string monomial_to_string(const SuperMonomial& m);
std::optional<SuperMonomial> monomial_from_string(const std::string& text, size_t nvars);

/// JSON (machine-readable) report builders; all deterministic and
/// stable-ordered.
Json axiom_report_json(const AxiomReport& r);
Json integral_report_json(const IntegralReport& r);
Json condition_report_json(const ConditionReport& r);
Json solution_json(const MCSolution& sol, const GradedBasis& basis,
                   const McVerification& v, bool analytic);
Json obstruction_json(const ObstructionReport& ob, const GradedBasis& basis);
Json frobenius_json(const FrobeniusData& F, const TensorCheck& sym,
                    const TensorCheck& assoc, const TensorCheck& integ,
                    const TensorCheck& metric_const);
Json lefschetz_json(const LefschetzReport& r);
Json compare_json(const CompareReport& r);

Json poly_json(const SuperPolynomial& p, const GradedBasis& basis);
Json kpoly_json(const ScalarPoly& p);

}  // namespace dgbv
