#include "vcgap/json_io.hpp"

#include "vcgap/errors.hpp"

namespace vcgap {

namespace {

const Json& field(const Json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("certificate JSON: missing field '") + name + "'");
    return *it;
}

Rat rat_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string()) throw ParseError(std::string("certificate JSON: field '") + name + "' must be a \"p/q\" string");
    return rat_parse(f.get<std::string>());
}

std::vector<Rat> rat_vector(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_array()) throw ParseError(std::string("certificate JSON: field '") + name + "' must be an array");
    std::vector<Rat> out;
    out.reserve(f.size());
    for (const Json& e : f) {
        if (!e.is_string()) throw ParseError(std::string("certificate JSON: entries of '") + name + "' must be \"p/q\" strings");
        out.push_back(rat_parse(e.get<std::string>()));
    }
    return out;
}

VertexSet vertex_set(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_array()) throw ParseError(std::string("certificate JSON: field '") + name + "' must be an array");
    std::vector<int> members;
    members.reserve(f.size());
    for (const Json& e : f) {
        if (!e.is_number_integer()) throw ParseError(std::string("certificate JSON: entries of '") + name + "' must be integers");
        members.push_back(e.get<int>());
    }
    return VertexSet(std::move(members));
}

Json vertex_set_to_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.num_vertices();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("graph JSON: expected an object");
    const Json& jn = field(j, "n");
    if (!jn.is_number_integer()) throw ParseError("graph JSON: 'n' must be an integer");
    const Json& je = field(j, "edges");
    if (!je.is_array()) throw ParseError("graph JSON: 'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(je.size());
    for (const Json& e : je) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw ParseError("graph JSON: each edge must be a pair of integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(jn.get<int>(), std::move(edges));
    } catch (const DomainError& err) {
        throw ParseError(std::string("graph JSON: ") + err.what());
    }
}

Json coloring_to_json(const FractionalColoring& coloring) {
    Json j;
    j["value"] = rat_str(coloring.value);
    Json classes = Json::array();
    for (const ColorClass& cls : coloring.classes) {
        Json c;
        c["vertices"] = vertex_set_to_json(cls.vertices);
        c["weight"] = rat_str(cls.weight);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json report_to_json(const Report& report) {
    Json checks = Json::array();
    for (const Report::Entry& e : report.entries) {
        Json c;
        c["check"] = e.check;
        c["pass"] = e.pass;
        if (!e.detail.empty()) c["detail"] = e.detail;
        checks.push_back(std::move(c));
    }
    Json j;
    j["checks"] = std::move(checks);
    j["all_pass"] = report.ok();
    return j;
}

Json certificate_to_json(const Graph& g, const GapCertificate& cert, std::uint64_t seed) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed;
    j["graph"] = graph_to_json(g);
    j["chi_f"] = rat_str(cert.chi_f);
    j["rho"] = rat_str(cert.rho);
    j["worst_cost"] = rat_strs(cert.worst_cost);
    j["lp_value"] = rat_str(cert.lp_value);
    j["ip_value"] = rat_str(cert.ip_value);
    j["ratio"] = rat_str(cert.ratio);
    j["x_star"] = rat_strs(cert.x_star.x);
    Json partition;
    partition["v0"] = vertex_set_to_json(cert.x_star.v0);
    partition["v_half"] = vertex_set_to_json(cert.x_star.v_half);
    partition["v1"] = vertex_set_to_json(cert.x_star.v1);
    j["partition"] = std::move(partition);
    j["h_coloring"] = coloring_to_json(cert.h_coloring);
    Json covers = Json::array();
    for (const CoverTerm& term : cert.covers) {
        Json c;
        c["vertices"] = vertex_set_to_json(term.cover);
        c["lambda"] = rat_str(term.lambda);
        covers.push_back(std::move(c));
    }
    j["covers"] = std::move(covers);
    return j;
}

LoadedCertificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("certificate JSON: expected an object");
    const Json& version = field(j, "schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw ParseError("certificate JSON: unsupported schema_version");
    }

    LoadedCertificate loaded;
    const Json& seed = field(j, "seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
        throw ParseError("certificate JSON: 'seed' must be an integer");
    }
    loaded.seed = seed.get<std::uint64_t>();
    loaded.graph = graph_from_json(field(j, "graph"));

    GapCertificate& cert = loaded.cert;
    cert.chi_f = rat_field(j, "chi_f");
    cert.rho = rat_field(j, "rho");
    cert.worst_cost = rat_vector(j, "worst_cost");
    cert.lp_value = rat_field(j, "lp_value");
    cert.ip_value = rat_field(j, "ip_value");
    cert.ratio = rat_field(j, "ratio");
    cert.x_star.x = rat_vector(j, "x_star");
    cert.x_star.objective = cert.lp_value;
    const Json& partition = field(j, "partition");
    cert.x_star.v0 = vertex_set(partition, "v0");
    cert.x_star.v_half = vertex_set(partition, "v_half");
    cert.x_star.v1 = vertex_set(partition, "v1");

    const Json& coloring = field(j, "h_coloring");
    cert.h_coloring.value = rat_field(coloring, "value");
    const Json& classes = field(coloring, "classes");
    if (!classes.is_array()) throw ParseError("certificate JSON: 'classes' must be an array");
    for (const Json& cls : classes) {
        cert.h_coloring.classes.push_back({vertex_set(cls, "vertices"), rat_field(cls, "weight")});
    }

    const Json& covers = field(j, "covers");
    if (!covers.is_array()) throw ParseError("certificate JSON: 'covers' must be an array");
    for (const Json& cover : covers) {
        cert.covers.push_back({vertex_set(cover, "vertices"), rat_field(cover, "lambda")});
    }
    return loaded;
}

}  // namespace vcgap
