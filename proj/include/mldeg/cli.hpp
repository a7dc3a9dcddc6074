#pragma once

// JSON problem files, report assembly and the theorem/oracle/verify pipeline
// behind the mldeg command line tool.

#include "mldeg/error.hpp"
#include "mldeg/groebner.hpp"
#include "mldeg/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mldeg {

using Json = nlohmann::ordered_json;

enum class Mode { Theorem, OracleEuler, OracleCritical, Verify };

std::string_view mode_name(Mode mode);

struct JobSpec {
    Mode mode = Mode::Theorem;
    std::string input_path;
    std::uint64_t seed = 0;
    unsigned trials = 2;
    GroebnerBudget budget{};
    unsigned critical_max_dimension = 2;
};

struct ProblemInput {
    unsigned n = 0;
    std::vector<std::string> variables;
    std::vector<Polynomial> polynomials;
};

// Schema: {"n", "variables", "polynomials": [{"terms": [{"coeff", "exponents"}]}]}.
// Throws InvalidInput.
ProblemInput parse_problem(const Json& doc);
ProblemInput read_problem(const std::string& path);

Json polynomial_to_json(const Polynomial& f, std::span<const std::string> names);
Polynomial polynomial_from_json(const Json& doc, unsigned nvars);
Json problem_to_json(const ProblemInput& input);

// 0 success, 2 schema/validation, 3 precondition, 4 disagreement or mismatch,
// 5 budget exceeded.
int exit_code_for(ErrorCode code);

struct RunResult {
    Json report;
    int exit_code = 0;
    std::string summary; // human-readable, one line per fact
};

RunResult run(const JobSpec& job);
RunResult run_problem(const JobSpec& job, const ProblemInput& input);

} // namespace mldeg
