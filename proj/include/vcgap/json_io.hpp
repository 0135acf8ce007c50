#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "vcgap/gap.hpp"
#include "vcgap/graph.hpp"
#include "vcgap/report.hpp"

namespace vcgap {

// Ordered JSON keeps field order stable so identical runs serialize
// byte-identically. Rationals are always "p/q" strings, never floats.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);  // throws ParseError

Json coloring_to_json(const FractionalColoring& coloring);
Json report_to_json(const Report& report);

// Self-contained certificate: embeds the graph so third parties can re-check
// without the original input file.
Json certificate_to_json(const Graph& g, const GapCertificate& cert, std::uint64_t seed);

struct LoadedCertificate {
    Graph graph;
    GapCertificate cert;
    std::uint64_t seed = 0;
};

LoadedCertificate certificate_from_json(const Json& j);  // throws ParseError

}  // namespace vcgap
