#include <iostream>

#include <CLI11.hpp>

#include "vcgap/cli.hpp"

namespace {

void add_common_options(CLI::App* sub, vcgap::RunConfig& config) {
    sub->add_option("--input", config.input_path, "DIMACS graph file (certificate JSON for verify)");
    sub->add_option("--family", config.family,
                    "graph family spec, e.g. --family cycle 5 or --family mycielskian_of cycle 5")
        ->expected(-1);
    sub->add_option("--costs", config.costs, "cost source: unit | worst | PATH")
        ->default_val("unit");
    sub->add_flag("--oracle", config.oracle, "use full-enumeration oracles where available");
    sub->add_option("--seed", config.seed, "random seed, recorded in every output")
        ->default_val(0);
    sub->add_option("--limit-exact", config.limit_exact, "max vertices for the exact IP solver")
        ->envname("VCGAP_LIMIT_EXACT")
        ->default_val(vcgap::kDefaultExactLimit);
    sub->add_option("--limit-oracle", config.limit_oracle,
                    "max vertices for full-enumeration oracles")
        ->envname("VCGAP_LIMIT_ORACLE")
        ->default_val(vcgap::kDefaultOracleLimit);
    sub->add_option("--trials", config.trials, "number of random trials for proptest")
        ->default_val(100);
    sub->add_option("--output", config.output_path, "write output to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integrality-gap toolkit for the vertex cover LP relaxation"};
    app.require_subcommand(1);

    vcgap::RunConfig config;
    using Command = vcgap::RunConfig::Command;

    const std::pair<const char*, std::pair<Command, const char*>> commands[] = {
        {"chif", {Command::Chif, "compute the fractional chromatic number with primal and dual"}},
        {"vclp", {Command::Vclp, "solve the vertex cover LP relaxation exactly (both routes)"}},
        {"gap", {Command::Gap, "compute the integrality gap 2 - 2/chi_f"}},
        {"analyze", {Command::Analyze, "emit the full worst-case gap certificate as JSON"}},
        {"verify", {Command::Verify, "re-check a certificate independently of the solvers"}},
        {"generate", {Command::Generate, "write a graph family as DIMACS text"}},
        {"proptest", {Command::Proptest, "run seeded randomized property checks on one graph"}},
    };
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        add_common_options(sub, config);
        const Command cmd = entry.first;
        sub->callback([&config, cmd]() { config.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    return vcgap::run(config, std::cout, std::cerr);
}
