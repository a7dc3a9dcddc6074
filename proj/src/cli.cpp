#include "mldeg/cli.hpp"

#include "mldeg/arrangement.hpp"
#include "mldeg/likelihood.hpp"
#include "mldeg/map_analysis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace mldeg {

std::string_view mode_name(Mode mode)
{
    switch (mode) {
    case Mode::Theorem: return "theorem";
    case Mode::OracleEuler: return "oracle-euler";
    case Mode::OracleCritical: return "oracle-critical";
    case Mode::Verify: return "verify";
    }
    return "unknown";
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::DimensionMismatch:
        return 2;
    case ErrorCode::NonUnit:
    case ErrorCode::UndefinedGcd:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::CommonFactor:
    case ErrorCode::NotDominant:
    case ErrorCode::SharedReducedComponent:
    case ErrorCode::NotLinear:
        return 3;
    case ErrorCode::NotZeroDimensional:
    case ErrorCode::DegenerateChart:
    case ErrorCode::NonGenericWeights:
    case ErrorCode::Disagreement:
        return 4;
    case ErrorCode::BudgetExceeded:
        return 5;
    case ErrorCode::Internal:
        return 1;
    }
    return 1;
}

namespace {

[[noreturn]] void schema_error(const std::string& msg)
{
    throw Error(ErrorCode::InvalidInput, "input schema: " + msg);
}

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Json profile_json(const MapProfile& p, std::span<const std::string> names)
{
    Json j;
    j["n"] = p.n;
    j["d_f"] = p.d_f;
    j["reduced_degrees"] = p.reduced_degrees;
    j["dominant"] = p.dominant;
    j["base_locus_codim_ok"] = p.base_locus_codim_ok;
    j["pairwise_reduced_coprime"] = p.pairwise_reduced_coprime;
    Json parts = Json::array();
    for (const auto& r : p.reduced_parts)
        parts.push_back(to_string(r, names));
    j["reduced_parts"] = parts;
    return j;
}

Json critical_json(const OracleReport& r)
{
    Json j;
    j["name"] = "critical";
    j["count"] = r.count ? Json(*r.count) : Json(nullptr);
    j["agreed"] = r.agreed;
    Json trials = Json::array();
    for (const auto& t : r.trials) {
        Json tj;
        tj["seed"] = t.seed;
        tj["matrix_hash"] = t.matrix_hash;
        tj["weights"] = t.weights;
        tj["count"] = t.count;
        tj["retried"] = t.retried;
        trials.push_back(tj);
    }
    j["trials"] = trials;
    return j;
}

Json euler_json(const Integer& value)
{
    Json j;
    j["name"] = "euler";
    j["count"] = integer_json(value);
    j["trials"] = Json::array();
    return j;
}

Json skipped(std::string_view name, const std::string& reason)
{
    Json j;
    j["name"] = name;
    j["reason"] = reason;
    return j;
}

class Runner {
public:
    Runner(const JobSpec& job, const ProblemInput& input) : job_(job), input_(input)
    {
        report_["mode"] = mode_name(job.mode);
        report_["input"] = problem_to_json(input);
        report_["ml_degree"] = nullptr;
        report_["profile"] = nullptr;
        report_["oracles"] = Json::array();
        report_["skipped_oracles"] = Json::array();
        report_["warnings"] = Json::array();
        report_["verdict"] = nullptr;
    }

    RunResult execute()
    {
        try {
            switch (job_.mode) {
            case Mode::Theorem: theorem(); break;
            case Mode::OracleEuler: oracle_euler(); break;
            case Mode::OracleCritical: oracle_critical(); break;
            case Mode::Verify: verify(); break;
            }
        } catch (const Error& e) {
            fail(e.code(), e.what());
        }
        return {std::move(report_), exit_code_, summary_.str()};
    }

private:
    void note(const std::string& line) { summary_ << line << '\n'; }

    void warn(const std::string& w)
    {
        report_["warnings"].push_back(w);
        note("warning: " + w);
    }

    void fail(ErrorCode code, const std::string& message)
    {
        Json e;
        e["code"] = error_name(code);
        e["message"] = message;
        report_["error"] = e;
        exit_code_ = exit_code_for(code);
        note("error: " + message);
    }

    MapDegree theorem_value()
    {
        MapDegree result = ml_degree_of_map(MapInput{input_.n, input_.polynomials});
        report_["profile"] = profile_json(result.profile, input_.variables);
        std::ostringstream degs;
        for (auto d : result.profile.reduced_degrees)
            degs << (degs.tellp() ? "," : "") << d;
        note("theorem: d_f = " + std::to_string(result.profile.d_f) + ", reduced degrees (" + degs.str()
             + "), ML degree " + result.ml_degree.get_str());
        if (result.profile.reduced_part_possibly_reducible())
            warn("reduced_part_possibly_reducible");
        if (result.ml_degree < 0)
            warn("negative_ml_degree");
        return result;
    }

    void theorem()
    {
        MapDegree result = theorem_value();
        report_["ml_degree"] = integer_json(result.ml_degree);
    }

    Integer euler_value(std::vector<Polynomial> forms)
    {
        ProjectiveArrangement arr(input_.n, std::move(forms));
        Integer value = ml_degree_signed_euler(arr);
        report_["oracles"].push_back(euler_json(value));
        note("euler oracle: signed Euler characteristic " + value.get_str());
        return value;
    }

    void oracle_euler()
    {
        Integer value = euler_value(input_.polynomials);
        report_["ml_degree"] = integer_json(value);
    }

    OracleReport critical_value()
    {
        DivisorCollection coll(input_.n, input_.polynomials);
        OracleOptions options;
        options.trials = job_.trials;
        options.seed = job_.seed;
        options.max_dimension = job_.critical_max_dimension;
        options.budget = job_.budget;
        OracleReport r = count_critical_points(coll, options);
        report_["oracles"].push_back(critical_json(r));
        if (r.agreed)
            note("critical oracle: " + std::to_string(*r.count) + " critical points over "
                 + std::to_string(r.trials.size()) + " agreeing trials");
        else
            note("critical oracle: trials disagree");
        return r;
    }

    void oracle_critical()
    {
        OracleReport r = critical_value();
        if (!r.agreed) {
            fail(ErrorCode::Disagreement, "critical-point counts differ across trials");
            return;
        }
        report_["ml_degree"] = *r.count;
    }

    void verify()
    {
        MapDegree theorem = theorem_value();
        report_["ml_degree"] = integer_json(theorem.ml_degree);
        Json values;
        values["theorem"] = integer_json(theorem.ml_degree);
        std::vector<Integer> computed{theorem.ml_degree};

        const auto& profile = theorem.profile;
        const bool linear = std::all_of(profile.reduced_degrees.begin(), profile.reduced_degrees.end(),
                                        [](auto d) { return d == 1; });
        if (linear) {
            Integer e = euler_value(profile.reduced_parts);
            values["euler"] = integer_json(e);
            computed.push_back(e);
        } else {
            report_["skipped_oracles"].push_back(skipped("euler", "some reduced part is not linear"));
        }

        bool disagreement = false;
        unsigned total_degree = 0;
        for (const auto& f : input_.polynomials)
            total_degree += static_cast<unsigned>(f.total_degree());
        if (input_.n > job_.critical_max_dimension) {
            report_["skipped_oracles"].push_back(
                skipped("critical", "dimension above " + std::to_string(job_.critical_max_dimension)));
        } else if (total_degree + 1 > job_.budget.max_degree) {
            report_["skipped_oracles"].push_back(skipped("critical", "degrees exceed the Groebner degree budget"));
        } else {
            try {
                OracleReport r = critical_value();
                if (r.agreed) {
                    values["critical"] = *r.count;
                    computed.emplace_back(static_cast<unsigned long>(*r.count));
                } else {
                    disagreement = true;
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::NotZeroDimensional)
                    throw;
                report_["skipped_oracles"].push_back(skipped("critical", e.what()));
                warn(e.code() == ErrorCode::BudgetExceeded ? "critical_oracle_budget_exceeded"
                                                           : "critical_oracle_not_zero_dimensional");
            }
        }
        report_["values"] = values;

        const bool all_equal = std::all_of(computed.begin(), computed.end(),
                                           [&](const Integer& v) { return v == computed.front(); });
        if (disagreement) {
            report_["verdict"] = "mismatch";
            fail(ErrorCode::Disagreement, "critical-point counts differ across trials");
        } else if (all_equal) {
            report_["verdict"] = "match";
            note("verdict: match");
        } else if (profile.reduced_part_possibly_reducible()) {
            report_["verdict"] = "ambiguous";
            note("verdict: ambiguous (reduced parts may be reducible)");
        } else {
            report_["verdict"] = "mismatch";
            fail(ErrorCode::Disagreement, "theorem and oracle values differ");
        }
    }

    const JobSpec& job_;
    const ProblemInput& input_;
    Json report_;
    int exit_code_ = 0;
    std::ostringstream summary_;
};

} // namespace

Json polynomial_to_json(const Polynomial& f, std::span<const std::string> names)
{
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        Json tj;
        tj["coeff"] = to_string(t.coeff);
        tj["exponents"] = t.mono.exponents();
        terms.push_back(tj);
    }
    Json j;
    j["text"] = to_string(f, names);
    j["terms"] = terms;
    return j;
}

Polynomial polynomial_from_json(const Json& doc, unsigned nvars)
{
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
        schema_error("each polynomial must be an object with a \"terms\" array");
    std::vector<Term> terms;
    for (const auto& t : doc["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents"))
            schema_error("each term needs \"coeff\" and \"exponents\"");
        if (!t["coeff"].is_string())
            schema_error("coefficients must be strings");
        auto q = parse_rational(t["coeff"].get<std::string>());
        if (!q)
            schema_error("malformed coefficient \"" + t["coeff"].get<std::string>() + "\"");
        const auto& e = t["exponents"];
        if (!e.is_array() || e.size() != nvars)
            schema_error("exponent vectors must have " + std::to_string(nvars) + " entries");
        std::vector<std::uint32_t> exps;
        for (const auto& x : e) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
                schema_error("exponents must be non-negative integers");
            auto v = x.get<std::uint64_t>();
            if (v > 1000)
                schema_error("exponent too large");
            exps.push_back(static_cast<std::uint32_t>(v));
        }
        terms.push_back({Monomial(std::move(exps)), *q});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

ProblemInput parse_problem(const Json& doc)
{
    if (!doc.is_object())
        schema_error("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1
        || doc["n"].get<std::int64_t>() > 16)
        schema_error("\"n\" must be an integer between 1 and 16");
    ProblemInput input;
    input.n = static_cast<unsigned>(doc["n"].get<std::int64_t>());
    if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].size() != input.n + 1)
        schema_error("\"variables\" must list n+1 names");
    std::set<std::string> seen;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string() || !valid_identifier(v.get<std::string>()))
            schema_error("variable names must be identifiers");
        if (!seen.insert(v.get<std::string>()).second)
            schema_error("duplicate variable name " + v.get<std::string>());
        input.variables.push_back(v.get<std::string>());
    }
    if (!doc.contains("polynomials") || !doc["polynomials"].is_array() || doc["polynomials"].empty())
        schema_error("\"polynomials\" must be a non-empty array");
    for (const auto& p : doc["polynomials"])
        input.polynomials.push_back(polynomial_from_json(p, input.n + 1));
    return input;
}

ProblemInput read_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open input file " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(doc);
}

Json problem_to_json(const ProblemInput& input)
{
    Json j;
    j["n"] = input.n;
    j["variables"] = input.variables;
    Json polys = Json::array();
    for (const auto& p : input.polynomials)
        polys.push_back(polynomial_to_json(p, input.variables));
    j["polynomials"] = polys;
    return j;
}

RunResult run_problem(const JobSpec& job, const ProblemInput& input)
{
    return Runner(job, input).execute();
}

RunResult run(const JobSpec& job)
{
    ProblemInput input;
    try {
        input = read_problem(job.input_path);
    } catch (const Error& e) {
        Json report;
        report["mode"] = mode_name(job.mode);
        Json err;
        err["code"] = error_name(e.code());
        err["message"] = e.what();
        report["error"] = err;
        return {report, exit_code_for(e.code()), std::string("error: ") + e.what() + "\n"};
    }
    return run_problem(job, input);
}

} // namespace mldeg
