#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgp {

// Time-space network for railway crew scheduling. Nodes are trips plus one
// source/sink pair per crew base and a single deadhead terminal; edges are the
// feasible transitions of a duty. Immutable once built, safe to share across
// threads read-only.

enum class NodeKind : std::uint8_t { Source, Sink, Service, Deadhead };
enum class EdgeKind : std::uint8_t { SignIn, SignOff, DeadheadEdge, Connection };

// Deadhead node carries no geography or clock; these sentinels stand in.
constexpr int kNoStation = -1;
constexpr int kNoTime = 0;

constexpr int kMinTransitMinutes = 15;   // minimum gap between connected trips
constexpr int kMaxDutyMinutes = 480;     // 8-hour working-time cap
constexpr double kSignOffCost = 1.0;
constexpr double kDeadheadCost = 1.5;

struct Node {
    int id = 0;
    NodeKind kind = NodeKind::Service;
    int station_dep = kNoStation;
    int station_arr = kNoStation;
    int t_dep = kNoTime;  // minutes from midnight
    int t_arr = kNoTime;

    int duration() const { return t_arr - t_dep; }
    bool operator==(const Node&) const = default;
};

struct Edge {
    int id = 0;
    EdgeKind kind = EdgeKind::Connection;
    int tail = 0;
    int head = 0;
    int time_use = 0;         // working-time resource consumed by this edge
    double fixed_cost = 0.0;  // 1.0 for SignOff, 1.5 for DeadheadEdge, else 0

    bool operator==(const Edge&) const = default;
};

struct TimeSpaceGraph {
    int n_stations = 0;
    std::vector<int> crew_bases;  // station indices, ascending
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    // Derived by build_adjacency; never serialized.
    std::vector<std::vector<int>> out_edges;
    std::vector<std::vector<int>> in_edges;
    std::vector<int> topo_order;         // node ids, every tail before its head
    std::vector<int> trip_row;           // node id -> covering row, -1 if not Service
    std::vector<int> service_nodes;      // row -> node id
    std::vector<int> connection_edges;   // edge ids of kind Connection, ascending
    std::vector<int> conn_index;         // edge id -> position in connection_edges, -1 otherwise

    int num_trips() const { return static_cast<int>(service_nodes.size()); }
    int num_connection_edges() const { return static_cast<int>(connection_edges.size()); }

    bool same_instance(const TimeSpaceGraph& o) const {
        return n_stations == o.n_stations && crew_bases == o.crew_bases &&
               nodes == o.nodes && edges == o.edges;
    }
};

// Computes adjacency lists, a topological order, and the trip/connection
// indices. Throws CycleDetected if the edge set has a directed cycle.
TimeSpaceGraph build_adjacency(std::vector<Node> nodes, std::vector<Edge> edges,
                               int n_stations, std::vector<int> crew_bases);

// Diagnostic sweep over every structural invariant (edge kind endpoints,
// 15-minute transit gaps, geographic continuity, fixed costs, trip clocks).
// Returns one message per violation; empty means valid.
std::vector<std::string> validate_graph(const TimeSpaceGraph& g);

// rcsp-v1 instance format: a single JSON object with fields `format`,
// `stations`, `crew_bases`, `nodes[]`, `edges[]`. parse(serialize(g)) is the
// identity on the structural data. Throws ParseError on malformed input.
std::string serialize_instance(const TimeSpaceGraph& g);
TimeSpaceGraph parse_instance(const std::string& text);

void save_instance(const TimeSpaceGraph& g, const std::string& path);
TimeSpaceGraph load_instance(const std::string& path);

const char* to_string(NodeKind k);
const char* to_string(EdgeKind k);

}  // namespace cgp
