#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcgen/graph.hpp"
#include "wcgen/oracle.hpp"

namespace wcgen {

enum class Method { Separator, TwoPair };

inline const char* to_string(Method m) {
    return m == Method::Separator ? "separator" : "two-pair";
}

// Run-time certification of accepted insertions: Auto enables it up to the
// threshold vertex count.
enum class OracleGate { On, Off, Auto };

inline const char* to_string(OracleGate g) {
    switch (g) {
        case OracleGate::On: return "on";
        case OracleGate::Off: return "off";
        default: return "auto";
    }
}

enum class Outcome {
    Inserted,
    RejectedExistingEdge,
    RejectedLongShortestPath,
    RejectedForbiddenConfig,
    RejectedAlternateLongerPath,
    RejectedOracleVeto,
};
inline constexpr std::size_t kOutcomeCount = 6;

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Inserted: return "inserted";
        case Outcome::RejectedExistingEdge: return "rejected-existing-edge";
        case Outcome::RejectedLongShortestPath: return "rejected-long-shortest-path";
        case Outcome::RejectedForbiddenConfig: return "rejected-forbidden-config";
        case Outcome::RejectedAlternateLongerPath: return "rejected-alternate-longer-path";
        default: return "rejected-oracle-veto";
    }
}

enum class CaseLabel { None, C1_1, C1_2_1, C1_2_2, C2_1, C2_2 };

inline const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::C1_1: return "1.1";
        case CaseLabel::C1_2_1: return "1.2.1";
        case CaseLabel::C1_2_2: return "1.2.2";
        case CaseLabel::C2_1: return "2.1";
        case CaseLabel::C2_2: return "2.2";
        default: return "n/a";
    }
}

// Decision for one candidate pair. Witnesses: the blocking path for
// long-path/alternate-path rejections, the offending path pair for forbidden
// configurations, and the hole for oracle vetoes.
struct Verdict {
    Outcome outcome = Outcome::RejectedExistingEdge;
    CaseLabel case_label = CaseLabel::None;
    std::vector<Vertex> witness_path;
    std::vector<Vertex> witness_second_path;
    std::optional<HoleWitness> veto_witness;
    bool anomaly = false;     // defensively handled state that should not occur
    long mutation_ns = -1;    // wall time of the adjacency update, inserted only

    bool inserted() const { return outcome == Outcome::Inserted; }
};

struct GenParams {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    Method method = Method::Separator;
    OracleGate gate = OracleGate::Auto;
    int gate_threshold = 64;
    long stall_limit = 0;  // 0 picks the default 4n^2
    double split_probability = 0.5;
    bool record_timings = false;
};

struct GenEvent {
    Vertex u = -1;
    Vertex v = -1;
    Verdict verdict;
};

// Everything needed to reproduce a rejected-by-oracle insertion offline.
struct VetoRecord {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> graph_edges;  // state before the attempt
    Vertex u = -1;
    Vertex v = -1;
    HoleWitness hole;
};

struct GenCounters {
    long attempts = 0;
    long fallback_two_pair_insertions = 0;
    long oracle_vetoes = 0;
    std::array<long, kOutcomeCount> by_outcome{};
};

struct GenTrace {
    GenParams params;
    int initial_edge_count = 0;  // m'
    bool early_return = false;
    std::vector<GenEvent> events;
    std::vector<std::pair<Vertex, Vertex>> fallback_insertions;
    std::vector<VetoRecord> vetoes;
    GenCounters counters;
    // populated when params.record_timings is set
    std::vector<long> query_ns;
    std::vector<long> mutation_ns;
    double layout_ms = 0.0;
    double insert_loop_ms = 0.0;
};

}  // namespace wcgen
