#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wcgen/graph.hpp"
#include "wcgen/trace.hpp"

namespace wcgen {

enum class GraphFormat { EdgeList, Dot, Json };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline long parse_long(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        const long value = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + what + ", got '" +
                         tok + "'");
    }
}

inline void add_parsed_edge(Graph& g, long u, long v, int line_no) {
    if (u == v)
        throw ParseError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(u));
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                         std::to_string(u < 0 || u >= g.vertex_count() ? u : v) +
                         " out of range [0," + std::to_string(g.vertex_count()) + ")");
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                         std::to_string(u) + " " + std::to_string(v));
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    return lines;
}

}  // namespace detail

// "n m" header, then one "u v" pair per line with u < v, sorted. Byte-stable
// for a given graph, and parse(serialize(g)) == g.
inline std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_edgelist(const std::string& text) {
    const auto lines = detail::lines_of(text);
    std::size_t i = 0;
    while (i < lines.size() && detail::split_ws(lines[i]).empty()) ++i;
    if (i >= lines.size()) throw ParseError("line 1: missing 'n m' header");

    const auto header = detail::split_ws(lines[i]);
    if (header.size() != 2)
        throw ParseError("line " + std::to_string(i + 1) + ": header must be 'n m'");
    const long n = detail::parse_long(header[0], static_cast<int>(i + 1), "vertex count");
    const long m = detail::parse_long(header[1], static_cast<int>(i + 1), "edge count");
    if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(i + 1) + ": negative header value");

    Graph g(static_cast<int>(n));
    long seen = 0;
    for (++i; i < lines.size(); ++i) {
        const auto toks = detail::split_ws(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(i + 1) + ": expected 'u v'");
        const long u = detail::parse_long(toks[0], static_cast<int>(i + 1), "vertex id");
        const long v = detail::parse_long(toks[1], static_cast<int>(i + 1), "vertex id");
        detail::add_parsed_edge(g, u, v, static_cast<int>(i + 1));
        ++seen;
    }
    if (seen != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    return g;
}

// Undirected graph block with bare integer ids; every vertex gets a node
// statement so the order is recoverable.
inline std::string serialize_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline Graph parse_dot(const std::string& text) {
    const auto lines = detail::lines_of(text);
    long max_id = -1;
    std::vector<std::pair<long, long>> edges;
    std::vector<int> edge_lines;
    bool in_block = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        for (char& ch : line)
            if (ch == ';') ch = ' ';
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (!in_block) {
            if (toks[0] != "graph")
                throw ParseError("line " + std::to_string(i + 1) + ": expected 'graph ... {'");
            in_block = true;
            continue;
        }
        if (toks[0] == "}") break;
        if (toks.size() == 1) {
            max_id = std::max(max_id, detail::parse_long(toks[0], static_cast<int>(i + 1),
                                                         "vertex id"));
        } else if (toks.size() == 3 && toks[1] == "--") {
            const long u = detail::parse_long(toks[0], static_cast<int>(i + 1), "vertex id");
            const long v = detail::parse_long(toks[2], static_cast<int>(i + 1), "vertex id");
            max_id = std::max({max_id, u, v});
            edges.emplace_back(u, v);
            edge_lines.push_back(static_cast<int>(i + 1));
        } else {
            throw ParseError("line " + std::to_string(i + 1) + ": unsupported statement");
        }
    }
    if (!in_block) throw ParseError("line 1: no graph block found");
    Graph g(static_cast<int>(max_id + 1));
    for (std::size_t e = 0; e < edges.size(); ++e)
        detail::add_parsed_edge(g, edges[e].first, edges[e].second, edge_lines[e]);
    return g;
}

// {"n": ..., "edges": [[u,v],...], "metadata": {...}} with sorted edges.
inline std::string serialize_json(const Graph& g,
                                  const nlohmann::ordered_json& metadata = nullptr) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    if (!metadata.is_null()) j["metadata"] = metadata;
    return j.dump(2) + "\n";
}

inline Graph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("json graph needs an integer field 'n'");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("json graph needs an array field 'edges'");
    const long n = j["n"].get<long>();
    if (n < 0) throw ParseError("json field 'n' must be non-negative");
    Graph g(static_cast<int>(n));
    int index = 0;
    for (const auto& e : j["edges"]) {
        ++index;
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edge " + std::to_string(index) + ": expected a pair [u, v]");
        detail::add_parsed_edge(g, e[0].get<long>(), e[1].get<long>(), index);
    }
    return g;
}

inline std::string serialize_graph(const Graph& g, GraphFormat format,
                                   const nlohmann::ordered_json& metadata = nullptr) {
    switch (format) {
        case GraphFormat::EdgeList: return serialize_edgelist(g);
        case GraphFormat::Dot: return serialize_dot(g);
        default: return serialize_json(g, metadata);
    }
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edgelist(text);
        case GraphFormat::Dot: return parse_dot(text);
        default: return parse_json(text);
    }
}

inline GraphFormat format_from_name(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "json") return GraphFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

inline const char* to_string(GraphFormat f) {
    switch (f) {
        case GraphFormat::EdgeList: return "edgelist";
        case GraphFormat::Dot: return "dot";
        default: return "json";
    }
}

// Extension first, then a peek at the content.
inline GraphFormat detect_format(const std::string& path, const std::string& content) {
    auto ends_with = [&](const char* suffix) {
        const std::string s(suffix);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".json")) return GraphFormat::Json;
    if (ends_with(".dot") || ends_with(".gv")) return GraphFormat::Dot;
    for (char ch : content) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return GraphFormat::Json;
        if (ch == 'g') return GraphFormat::Dot;
        break;
    }
    return GraphFormat::EdgeList;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

inline Graph read_graph_file(const std::string& path) {
    const std::string content = read_text_file(path);
    return parse_graph(content, detect_format(path, content));
}

inline nlohmann::ordered_json trace_to_json(const GenTrace& trace) {
    nlohmann::ordered_json j;
    j["params"] = {{"n", trace.params.n},
                   {"m", trace.params.m},
                   {"seed", trace.params.seed},
                   {"method", to_string(trace.params.method)},
                   {"oracle_gate", to_string(trace.params.gate)},
                   {"gate_threshold", trace.params.gate_threshold},
                   {"split_probability", trace.params.split_probability},
                   {"rng", Rng::kAlgorithm}};
    j["initial_edge_count"] = trace.initial_edge_count;
    j["early_return"] = trace.early_return;
    j["counters"] = {{"attempts", trace.counters.attempts},
                     {"fallback_two_pair_insertions", trace.counters.fallback_two_pair_insertions},
                     {"oracle_vetoes", trace.counters.oracle_vetoes}};
    auto& by_outcome = j["counters"]["by_outcome"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kOutcomeCount; ++i)
        by_outcome[to_string(static_cast<Outcome>(i))] = trace.counters.by_outcome[i];
    auto& events = j["events"] = nlohmann::ordered_json::array();
    for (const auto& e : trace.events) {
        nlohmann::ordered_json je = {{"u", e.u},
                                     {"v", e.v},
                                     {"outcome", to_string(e.verdict.outcome)},
                                     {"case", to_string(e.verdict.case_label)}};
        if (!e.verdict.witness_path.empty()) je["witness"] = e.verdict.witness_path;
        if (!e.verdict.witness_second_path.empty())
            je["witness_second"] = e.verdict.witness_second_path;
        if (e.verdict.veto_witness) {
            je["hole_side"] = to_string(e.verdict.veto_witness->side);
            je["hole"] = e.verdict.veto_witness->cycle;
        }
        if (e.verdict.anomaly) je["anomaly"] = true;
        events.push_back(std::move(je));
    }
    auto& fallbacks = j["fallback_insertions"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : trace.fallback_insertions) fallbacks.push_back({u, v});
    auto& vetoes = j["vetoes"] = nlohmann::ordered_json::array();
    for (const auto& record : trace.vetoes) {
        nlohmann::ordered_json jr;
        jr["n"] = record.n;
        jr["u"] = record.u;
        jr["v"] = record.v;
        auto& edges = jr["graph_edges"] = nlohmann::ordered_json::array();
        for (const auto& [a, b] : record.graph_edges) edges.push_back({a, b});
        jr["hole_side"] = to_string(record.hole.side);
        jr["hole"] = record.hole.cycle;
        vetoes.push_back(std::move(jr));
    }
    return j;
}

}  // namespace wcgen
