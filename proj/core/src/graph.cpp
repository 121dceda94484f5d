#include "cgp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "cgp/errors.hpp"
#include "json.hpp"

namespace cgp {

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Source: return "Source";
        case NodeKind::Sink: return "Sink";
        case NodeKind::Service: return "Service";
        case NodeKind::Deadhead: return "Deadhead";
    }
    return "?";
}

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::SignIn: return "SignIn";
        case EdgeKind::SignOff: return "SignOff";
        case EdgeKind::DeadheadEdge: return "DeadheadEdge";
        case EdgeKind::Connection: return "Connection";
    }
    return "?";
}

namespace {

NodeKind node_kind_from(const std::string& s) {
    if (s == "Source") return NodeKind::Source;
    if (s == "Sink") return NodeKind::Sink;
    if (s == "Service") return NodeKind::Service;
    if (s == "Deadhead") return NodeKind::Deadhead;
    throw ParseError("unknown node kind '" + s + "'");
}

EdgeKind edge_kind_from(const std::string& s) {
    if (s == "SignIn") return EdgeKind::SignIn;
    if (s == "SignOff") return EdgeKind::SignOff;
    if (s == "DeadheadEdge") return EdgeKind::DeadheadEdge;
    if (s == "Connection") return EdgeKind::Connection;
    throw ParseError("unknown edge kind '" + s + "'");
}

}  // namespace

TimeSpaceGraph build_adjacency(std::vector<Node> nodes, std::vector<Edge> edges,
                               int n_stations, std::vector<int> crew_bases) {
    const int n = static_cast<int>(nodes.size());
    TimeSpaceGraph g;
    g.n_stations = n_stations;
    g.crew_bases = std::move(crew_bases);
    std::sort(g.crew_bases.begin(), g.crew_bases.end());
    g.nodes = std::move(nodes);
    g.edges = std::move(edges);

    g.out_edges.assign(n, {});
    g.in_edges.assign(n, {});
    for (const Edge& e : g.edges) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw Error("edge " + std::to_string(e.id) + " references invalid node id");
        g.out_edges[e.tail].push_back(e.id);
        g.in_edges[e.head].push_back(e.id);
    }

    // Kahn's algorithm, smallest node id first so the order is deterministic.
    std::vector<int> indeg(n, 0);
    for (const Edge& e : g.edges) ++indeg[e.head];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    g.topo_order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        g.topo_order.push_back(v);
        for (int eid : g.out_edges[v])
            if (--indeg[g.edges[eid].head] == 0) ready.push(g.edges[eid].head);
    }
    if (static_cast<int>(g.topo_order.size()) != n)
        throw CycleDetected("time-space graph contains a directed cycle");

    g.trip_row.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (g.nodes[v].kind == NodeKind::Service) {
            g.trip_row[v] = static_cast<int>(g.service_nodes.size());
            g.service_nodes.push_back(v);
        }
    }

    g.conn_index.assign(g.edges.size(), -1);
    for (const Edge& e : g.edges) {
        if (e.kind == EdgeKind::Connection) {
            g.conn_index[e.id] = static_cast<int>(g.connection_edges.size());
            g.connection_edges.push_back(e.id);
        }
    }
    return g;
}

std::vector<std::string> validate_graph(const TimeSpaceGraph& g) {
    std::vector<std::string> out;
    auto bad = [&out](const std::string& msg) { out.push_back(msg); };
    auto is_base = [&g](int s) {
        return std::binary_search(g.crew_bases.begin(), g.crew_bases.end(), s);
    };

    for (const Node& v : g.nodes) {
        switch (v.kind) {
            case NodeKind::Service:
                if (v.t_arr <= v.t_dep)
                    bad("node " + std::to_string(v.id) + ": service trip must have t_arr > t_dep");
                if (v.station_dep < 0 || v.station_dep >= g.n_stations ||
                    v.station_arr < 0 || v.station_arr >= g.n_stations)
                    bad("node " + std::to_string(v.id) + ": station index out of range");
                break;
            case NodeKind::Source:
            case NodeKind::Sink:
                if (v.station_dep != v.station_arr || !is_base(v.station_dep))
                    bad("node " + std::to_string(v.id) + ": source/sink must sit at a crew base");
                break;
            case NodeKind::Deadhead:
                if (v.station_dep != kNoStation || v.station_arr != kNoStation)
                    bad("node " + std::to_string(v.id) + ": deadhead node must use station sentinel");
                break;
        }
    }

    for (const Edge& e : g.edges) {
        const std::string tag = "edge " + std::to_string(e.id) + " (" + to_string(e.kind) + ")";
        const Node& t = g.nodes[e.tail];
        const Node& h = g.nodes[e.head];
        switch (e.kind) {
            case EdgeKind::SignIn:
                if (t.kind != NodeKind::Source || h.kind != NodeKind::Service)
                    bad(tag + ": endpoints must be Source -> Service");
                else if (h.station_dep != t.station_dep)
                    bad(tag + ": service trip must depart the sign-in base");
                if (e.fixed_cost != 0.0) bad(tag + ": sign-in cost must be 0");
                break;
            case EdgeKind::SignOff:
                if (t.kind != NodeKind::Service || h.kind != NodeKind::Sink)
                    bad(tag + ": endpoints must be Service -> Sink");
                else if (t.station_arr != h.station_dep)
                    bad(tag + ": service trip must arrive at the sign-off base");
                if (e.fixed_cost != kSignOffCost) bad(tag + ": sign-off cost must be 1.0");
                break;
            case EdgeKind::DeadheadEdge:
                if (t.kind != NodeKind::Service || h.kind != NodeKind::Deadhead)
                    bad(tag + ": endpoints must be Service -> Deadhead");
                if (e.fixed_cost != kDeadheadCost) bad(tag + ": deadhead cost must be 1.5");
                break;
            case EdgeKind::Connection:
                if (t.kind != NodeKind::Service || h.kind != NodeKind::Service) {
                    bad(tag + ": endpoints must be Service -> Service");
                } else {
                    if (h.t_dep - t.t_arr < kMinTransitMinutes)
                        bad(tag + ": transit gap below " + std::to_string(kMinTransitMinutes) + " minutes");
                    if (h.station_dep != t.station_arr)
                        bad(tag + ": geographic mismatch between trips");
                }
                if (e.fixed_cost != 0.0) bad(tag + ": connection cost must be 0");
                break;
        }
    }
    return out;
}

std::string serialize_instance(const TimeSpaceGraph& g) {
    nlohmann::ordered_json j;
    j["format"] = "rcsp-v1";
    j["stations"] = g.n_stations;
    j["crew_bases"] = g.crew_bases;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const Node& v : g.nodes) {
        j["nodes"].push_back({{"id", v.id},
                              {"kind", to_string(v.kind)},
                              {"station_dep", v.station_dep},
                              {"station_arr", v.station_arr},
                              {"t_dep", v.t_dep},
                              {"t_arr", v.t_arr}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges) {
        j["edges"].push_back({{"id", e.id},
                              {"kind", to_string(e.kind)},
                              {"tail", e.tail},
                              {"head", e.head},
                              {"time_use", e.time_use},
                              {"fixed_cost", e.fixed_cost}});
    }
    return j.dump(2) + "\n";
}

TimeSpaceGraph parse_instance(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("rcsp-v1: ") + e.what());
    }
    try {
        if (!j.is_object() || j.value("format", "") != "rcsp-v1")
            throw ParseError("rcsp-v1: missing or unknown format tag");

        const int n_stations = j.at("stations").get<int>();
        std::vector<int> bases = j.at("crew_bases").get<std::vector<int>>();

        std::vector<Node> nodes;
        for (const auto& jn : j.at("nodes")) {
            Node v;
            v.id = jn.at("id").get<int>();
            v.kind = node_kind_from(jn.at("kind").get<std::string>());
            v.station_dep = jn.at("station_dep").get<int>();
            v.station_arr = jn.at("station_arr").get<int>();
            v.t_dep = jn.at("t_dep").get<int>();
            v.t_arr = jn.at("t_arr").get<int>();
            nodes.push_back(v);
        }
        std::vector<Edge> edges;
        for (const auto& je : j.at("edges")) {
            Edge e;
            e.id = je.at("id").get<int>();
            e.kind = edge_kind_from(je.at("kind").get<std::string>());
            e.tail = je.at("tail").get<int>();
            e.head = je.at("head").get<int>();
            e.time_use = je.at("time_use").get<int>();
            e.fixed_cost = je.at("fixed_cost").get<double>();
            edges.push_back(e);
        }
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].id != static_cast<int>(i))
                throw ParseError("rcsp-v1: node ids must be dense and ordered");
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].id != static_cast<int>(i))
                throw ParseError("rcsp-v1: edge ids must be dense and ordered");
        for (const Edge& e : edges)
            if (e.tail < 0 || e.tail >= static_cast<int>(nodes.size()) || e.head < 0 ||
                e.head >= static_cast<int>(nodes.size()))
                throw ParseError("rcsp-v1: edge " + std::to_string(e.id) + " endpoint out of range");

        return build_adjacency(std::move(nodes), std::move(edges), n_stations, std::move(bases));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("rcsp-v1: ") + e.what());
    }
}

void save_instance(const TimeSpaceGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << serialize_instance(g);
}

TimeSpaceGraph load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

}  // namespace cgp
