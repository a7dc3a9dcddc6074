// mldeg: ML degree of a dominant self-map of P^n, with independent oracles.
//
//   mldeg theorem --input FILE
//   mldeg oracle euler --input FILE
//   mldeg oracle critical --input FILE --seed N --trials K
//   mldeg verify --input FILE --seed N

#include "mldeg/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Maximum likelihood degree of surjective rational self-maps of projective space"};
    app.require_subcommand(1);

    mldeg::JobSpec job;
    try {
        job.budget = mldeg::budget_from_environment();
    } catch (const mldeg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mldeg::exit_code_for(e.code());
    }

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", job.input_path, "JSON problem file")->required();
        cmd->add_option("--max-basis", job.budget.max_basis, "Groebner basis size cap")->check(CLI::PositiveNumber);
        cmd->add_option("--max-degree", job.budget.max_degree, "Groebner degree cap (at most 63)")
            ->check(CLI::Range(1u, 63u));
    };
    auto add_random = [&](CLI::App* cmd) {
        cmd->add_option("--seed", job.seed, "random seed");
        cmd->add_option("--trials", job.trials, "independent oracle trials")->check(CLI::Range(2u, 64u));
        cmd->add_option("--max-dim", job.critical_max_dimension, "largest n for the critical-point oracle");
    };

    auto* theorem = app.add_subcommand("theorem", "ML degree from the Chern class formula");
    add_common(theorem);

    auto* oracle = app.add_subcommand("oracle", "independent ML degree oracles");
    oracle->require_subcommand(1);
    auto* euler = oracle->add_subcommand("euler", "signed Euler characteristic of a hyperplane arrangement");
    add_common(euler);
    auto* critical = oracle->add_subcommand("critical", "count critical points of the log-likelihood");
    add_common(critical);
    add_random(critical);

    auto* verify = app.add_subcommand("verify", "theorem value cross-checked against applicable oracles");
    add_common(verify);
    add_random(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (theorem->parsed())
        job.mode = mldeg::Mode::Theorem;
    else if (euler->parsed())
        job.mode = mldeg::Mode::OracleEuler;
    else if (critical->parsed())
        job.mode = mldeg::Mode::OracleCritical;
    else
        job.mode = mldeg::Mode::Verify;

    mldeg::RunResult result = mldeg::run(job);
    std::cout << result.report.dump(2) << '\n';
    std::cerr << result.summary;
    return result.exit_code;
}
