#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcgap/frac_chromatic.hpp"
#include "vcgap/vc_lp.hpp"

namespace vcgap {

/// One fully-resolved command invocation. Exit codes produced by run():
///   0  success
///   1  domain error (edgeless graph, size limit, ...)
///   2  verification failure
///   3  parse / configuration error
struct RunConfig {
    enum class Command { Chif, Vclp, Gap, Analyze, Verify, Generate, Proptest };

    Command command = Command::Gap;
    std::optional<std::string> input_path;   // DIMACS file; certificate JSON for verify
    std::vector<std::string> family;         // e.g. {"cycle", "5"}
    std::string costs = "unit";              // "unit" | "worst" | path to a cost file
    bool oracle = false;
    std::uint64_t seed = 0;
    int limit_exact = kDefaultExactLimit;
    int limit_oracle = kDefaultOracleLimit;
    int trials = 100;
    std::optional<std::string> output_path;  // default: stdout
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// One rational per line ("p/q" or integer); entry count must equal n and all
// entries must be nonnegative. Throws ParseError otherwise.
CostVector cost_file_parse(const std::string& text, int n);

}  // namespace vcgap
