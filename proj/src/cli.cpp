#include "vcgap/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "vcgap/errors.hpp"
#include "vcgap/frac_chromatic.hpp"
#include "vcgap/gap.hpp"
#include "vcgap/instances.hpp"
#include "vcgap/json_io.hpp"

namespace vcgap {

CostVector cost_file_parse(const std::string& text, int n) {
    CostVector costs;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        Rat value = rat_parse(line);
        if (value < 0) {
            throw ParseError("cost file line " + std::to_string(line_no) + ": negative cost " +
                             rat_str(value));
        }
        costs.push_back(std::move(value));
    }
    if (static_cast<int>(costs.size()) != n) {
        throw ParseError("cost file has " + std::to_string(costs.size()) +
                         " entries but the graph has " + std::to_string(n) + " vertices");
    }
    return costs;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const RunConfig& config) {
    if (config.input_path && !config.family.empty()) {
        throw ParseError("give either --input or --family, not both");
    }
    if (config.input_path) return parse_dimacs(read_file(*config.input_path));
    if (!config.family.empty()) return parse_family_spec(config.family);
    throw ParseError("no graph source: give --input PATH or --family NAME PARAMS...");
}

CostVector resolve_costs(const RunConfig& config, const Graph& g) {
    if (config.costs == "unit") return unit_costs(g.num_vertices());
    if (config.costs == "worst") return solve_chi_f(g).duals.z;
    return cost_file_parse(read_file(config.costs), g.num_vertices());
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!file) throw ParseError("cannot open output file '" + *config.output_path + "'");
        file << text;
    } else {
        out << text;
    }
}

Json output_header(const RunConfig& config, const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["seed"] = config.seed;
    return j;
}

int cmd_generate(const RunConfig& config, std::ostream& out) {
    if (config.family.empty()) throw ParseError("generate requires --family NAME PARAMS...");
    emit(config, out,
         "c seed " + std::to_string(config.seed) + "\n" +
             write_dimacs(parse_family_spec(config.family)));
    return 0;
}

int cmd_gap(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config);
    if (g.num_edges() == 0) {
        throw DomainError("graph has no edges: the integrality gap is undefined (chi_f < 2)");
    }
    const ChiFResult chi = config.oracle ? chi_f_bruteforce(g, config.limit_oracle)
                                         : solve_chi_f(g);
    Json j = output_header(config, "gap");
    j["graph"] = graph_to_json(g);
    j["chi_f"] = rat_str(chi.value);
    j["rho"] = rat_str(2 - Rat(2) / chi.value);
    emit(config, out, j.dump(2) + "\n");
    return 0;
}

int cmd_chif(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config);
    const ChiFResult chi = config.oracle ? chi_f_bruteforce(g, config.limit_oracle)
                                         : solve_chi_f(g);
    Json j = output_header(config, "chif");
    j["graph"] = graph_to_json(g);
    j["oracle"] = config.oracle;
    j["chi_f"] = rat_str(chi.value);
    j["coloring"] = coloring_to_json(chi.coloring);
    Json dual;
    dual["value"] = rat_str(chi.duals.value);
    dual["z"] = rat_strs(chi.duals.z);
    j["dual"] = std::move(dual);
    emit(config, out, j.dump(2) + "\n");
    return 0;
}

int cmd_vclp(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config);
    const CostVector costs = resolve_costs(config, g);
    const HalfIntegralVC simplex = solve_vc_lp(g, costs);
    const HalfIntegralVC doubled = solve_vc_lp_bipartite_double(g, costs);
    if (simplex.objective != doubled.objective) {
        throw InvariantError("the two LP routes disagree: simplex " + rat_str(simplex.objective) +
                             " vs doubling " + rat_str(doubled.objective));
    }
    Json j = output_header(config, "vclp");
    j["graph"] = graph_to_json(g);
    j["costs"] = rat_strs(costs);
    j["objective"] = rat_str(simplex.objective);
    j["x"] = rat_strs(simplex.x);
    Json partition;
    partition["v0"] = simplex.v0.members();
    partition["v_half"] = simplex.v_half.members();
    partition["v1"] = simplex.v1.members();
    j["partition"] = std::move(partition);
    j["doubling_objective"] = rat_str(doubled.objective);
    emit(config, out, j.dump(2) + "\n");
    return 0;
}

int cmd_analyze(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config);
    const GapCertificate cert = worst_case_certificate(g, config.limit_exact);
    emit(config, out, certificate_to_json(g, cert, config.seed).dump(2) + "\n");
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.input_path) throw ParseError("verify requires --input CERTIFICATE.json");
    Json parsed;
    try {
        parsed = Json::parse(read_file(*config.input_path));
    } catch (const Json::parse_error& e) {
        throw ParseError("certificate JSON: " + std::string(e.what()));
    }
    const LoadedCertificate loaded = certificate_from_json(parsed);
    const Report report =
        verify_certificate(loaded.graph, loaded.cert, {config.oracle, config.limit_oracle});
    Json j = output_header(config, "verify");
    j["certificate_seed"] = loaded.seed;
    Json body = report_to_json(report);
    j["checks"] = std::move(body["checks"]);
    j["all_pass"] = report.ok();
    emit(config, out, j.dump(2) + "\n");
    if (!report.ok()) {
        for (const Report::Entry& e : report.entries) {
            if (!e.pass) err << "verify: FAILED " << e.check
                             << (e.detail.empty() ? "" : ": " + e.detail) << "\n";
        }
        return 2;
    }
    return 0;
}

int cmd_proptest(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(config);
    SeededRng rng(config.seed);

    Rat rho;
    const bool has_edges = g.num_edges() > 0;
    if (has_edges) rho = integrality_gap(g);

    int half_integral_ok = 0, routes_agree = 0, sandwich_ok = 0, ratio_ok = 0,
        ratio_undefined = 0;
    int violations = 0;
    const bool exact_fits = g.num_vertices() <= config.limit_exact;

    for (int trial = 0; trial < config.trials; ++trial) {
        const CostVector costs = random_costs(rng, g.num_vertices());
        const HalfIntegralVC lp = solve_vc_lp(g, costs);  // throws if not half-integral
        ++half_integral_ok;
        const HalfIntegralVC doubled = solve_vc_lp_bipartite_double(g, costs);
        if (lp.objective == doubled.objective) ++routes_agree;
        else ++violations;
        if (exact_fits) {
            const MinVertexCover ip = min_vc_exact(g, costs, config.limit_exact);
            if (lp.objective <= ip.cost && ip.cost <= 2 * lp.objective) ++sandwich_ok;
            else ++violations;
            if (has_edges) {
                if (lp.objective == 0) {
                    if (ip.cost == 0) ++ratio_undefined;
                    else ++violations;
                } else if (ip.cost / lp.objective <= rho) {
                    ++ratio_ok;
                } else {
                    ++violations;
                }
            }
        }
    }

    Json j = output_header(config, "proptest");
    j["graph"] = graph_to_json(g);
    j["trials"] = config.trials;
    if (has_edges) j["rho"] = rat_str(rho);
    Json counts;
    counts["half_integral"] = half_integral_ok;
    counts["lp_routes_agree"] = routes_agree;
    counts["sandwich"] = sandwich_ok;
    counts["ratio_le_rho"] = ratio_ok;
    counts["ratio_undefined_zero_ip"] = ratio_undefined;
    j["counts"] = std::move(counts);
    j["violations"] = violations;
    j["all_pass"] = violations == 0;
    emit(config, out, j.dump(2) + "\n");
    if (violations != 0) {
        err << "proptest: " << violations << " violation(s)\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.limit_exact <= 0 || config.limit_oracle <= 0 || config.trials < 0) {
            throw ParseError("limits must be positive and trials nonnegative");
        }
        switch (config.command) {
            case RunConfig::Command::Generate: return cmd_generate(config, out);
            case RunConfig::Command::Gap: return cmd_gap(config, out);
            case RunConfig::Command::Chif: return cmd_chif(config, out);
            case RunConfig::Command::Vclp: return cmd_vclp(config, out);
            case RunConfig::Command::Analyze: return cmd_analyze(config, out);
            case RunConfig::Command::Verify: return cmd_verify(config, out, err);
            case RunConfig::Command::Proptest: return cmd_proptest(config, out, err);
        }
        err << "error: unknown command\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace vcgap
