#include "cgp/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include "cgp/errors.hpp"

namespace cgp {

namespace {

struct Trip {
    int station_dep = 0;
    int station_arr = 0;
    int t_dep = 0;
    int t_arr = 0;

    auto key() const { return std::tie(t_dep, t_arr, station_dep, station_arr); }
};

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Walks one train over its stop sequence and appends a trip per segment.
void roll_train(const std::vector<int>& stops, int t0, const std::vector<int>& travel,
                std::mt19937_64& rng, std::vector<Trip>& out) {
    std::uniform_int_distribution<int> dwell(15, 25);
    int t = t0;
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
        int a = stops[k], b = stops[k + 1];
        int dur = 0;
        for (int s = std::min(a, b); s < std::max(a, b); ++s) dur += travel[s];
        Trip trip{a, b, t, t + dur};
        out.push_back(trip);
        t = trip.t_arr + dwell(rng);
    }
}

std::vector<Trip> roll_trips(const GenConfig& cfg, std::mt19937_64& rng) {
    const int S = cfg.n_stations;
    std::vector<int> travel(S - 1);
    std::uniform_int_distribution<int> travel_dist(cfg.travel_min, cfg.travel_max);
    for (int& t : travel) t = travel_dist(rng);

    std::vector<Trip> trips;

    // One early all-stops train out of each crew base keeps sign-in feasible
    // on every instance.
    {
        std::vector<int> up(S), down(S);
        for (int s = 0; s < S; ++s) up[s] = s, down[s] = S - 1 - s;
        roll_train(up, cfg.day_min, travel, rng, trips);
        roll_train(down, cfg.day_min, travel, rng, trips);
    }

    std::uniform_int_distribution<int> count_dist(cfg.n_trains_min, cfg.n_trains_max);
    const int n_random = count_dist(rng);

    // Spans weighted toward longer runs so arrivals spread over all stations.
    std::vector<double> span_w(S - 1);
    for (int s = 1; s < S; ++s) span_w[s - 1] = s;
    std::discrete_distribution<int> span_dist(span_w.begin(), span_w.end());
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> dep_dist(cfg.day_min, cfg.day_max - 240);

    for (int i = 0; i < n_random; ++i) {
        const int span = span_dist(rng) + 1;
        std::uniform_int_distribution<int> start_dist(0, S - 1 - span);
        int a = start_dist(rng);
        int b = a + span;
        if (coin(rng) < 0.5) std::swap(a, b);  // direction

        std::vector<int> stops{a};
        const int step = a < b ? 1 : -1;
        for (int s = a + step; s != b; s += step)
            if (coin(rng) < cfg.stop_prob) stops.push_back(s);
        stops.push_back(b);

        roll_train(stops, dep_dist(rng), travel, rng, trips);
    }
    return trips;
}

bool departs_base(const GenConfig& cfg, const Trip& t) {
    return t.station_dep == 0 || t.station_dep == cfg.n_stations - 1;
}

bool arrives_base(const GenConfig& cfg, const Trip& t) {
    return t.station_arr == 0 || t.station_arr == cfg.n_stations - 1;
}

// Minimal working time of any duty prefix ending with trip v: either sign in
// directly (if v departs a base) or chain after an earlier trip. Trips whose
// minimum exceeds the 8-hour cap cannot appear in any feasible duty and are
// dropped; removing them never affects the minimum of the survivors.
void drop_uncoverable(const GenConfig& cfg, std::vector<Trip>& trips) {
    std::vector<int> order(trips.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return trips[a].t_arr < trips[b].t_arr; });

    std::vector<int> minres(trips.size(), kInf);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const Trip& v = trips[order[oi]];
        int best = departs_base(cfg, v) ? v.t_arr - v.t_dep : kInf;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const Trip& u = trips[order[oj]];
            if (minres[order[oj]] >= kInf) continue;
            if (u.station_arr != v.station_dep) continue;
            if (v.t_dep - u.t_arr < kMinTransitMinutes) continue;
            best = std::min(best, minres[order[oj]] + (v.t_arr - u.t_arr));
        }
        minres[order[oi]] = best;
    }

    std::vector<Trip> kept;
    kept.reserve(trips.size());
    for (std::size_t i = 0; i < trips.size(); ++i)
        if (minres[i] <= kMaxDutyMinutes) kept.push_back(trips[i]);
    trips = std::move(kept);
}

TimeSpaceGraph assemble(const GenConfig& cfg, std::vector<Trip> trips) {
    std::sort(trips.begin(), trips.end(), [](const Trip& a, const Trip& b) { return a.key() < b.key(); });

    const std::vector<int> bases{0, cfg.n_stations - 1};
    const int n_bases = static_cast<int>(bases.size());
    const int n_trips = static_cast<int>(trips.size());

    std::vector<Node> nodes;
    nodes.reserve(n_trips + 2 * n_bases + 1);
    for (int b = 0; b < n_bases; ++b)
        nodes.push_back({b, NodeKind::Source, bases[b], bases[b], kNoTime, kNoTime});
    const int first_service = n_bases;
    for (int i = 0; i < n_trips; ++i)
        nodes.push_back({first_service + i, NodeKind::Service, trips[i].station_dep,
                         trips[i].station_arr, trips[i].t_dep, trips[i].t_arr});
    const int first_sink = first_service + n_trips;
    for (int b = 0; b < n_bases; ++b)
        nodes.push_back({first_sink + b, NodeKind::Sink, bases[b], bases[b], kNoTime, kNoTime});
    const int deadhead = first_sink + n_bases;
    nodes.push_back({deadhead, NodeKind::Deadhead, kNoStation, kNoStation, kNoTime, kNoTime});

    std::vector<Edge> edges;
    auto add = [&edges](EdgeKind kind, int tail, int head, int time_use, double cost) {
        edges.push_back({static_cast<int>(edges.size()), kind, tail, head, time_use, cost});
    };

    for (int b = 0; b < n_bases; ++b)
        for (int i = 0; i < n_trips; ++i)
            if (trips[i].station_dep == bases[b])
                add(EdgeKind::SignIn, b, first_service + i, trips[i].t_arr - trips[i].t_dep, 0.0);

    for (int i = 0; i < n_trips; ++i)
        for (int j = 0; j < n_trips; ++j)
            if (trips[i].station_arr == trips[j].station_dep &&
                trips[j].t_dep - trips[i].t_arr >= kMinTransitMinutes)
                add(EdgeKind::Connection, first_service + i, first_service + j,
                    trips[j].t_arr - trips[i].t_arr, 0.0);

    for (int i = 0; i < n_trips; ++i)
        if (arrives_base(cfg, trips[i])) {
            const int b = trips[i].station_arr == 0 ? 0 : 1;
            add(EdgeKind::SignOff, first_service + i, first_sink + b, 0, kSignOffCost);
        }
    for (int i = 0; i < n_trips; ++i)
        if (!arrives_base(cfg, trips[i]))
            add(EdgeKind::DeadheadEdge, first_service + i, deadhead, 0, kDeadheadCost);

    return build_adjacency(std::move(nodes), std::move(edges), cfg.n_stations, bases);
}

}  // namespace

GenConfig GenConfig::scaled(double factor) const {
    GenConfig c = *this;
    const double density = std::sqrt(factor);
    auto grow = [](int v, double f) { return static_cast<int>(std::lround(v * f)); };
    c.n_trains_min = grow(n_trains_min, density);
    c.n_trains_max = grow(n_trains_max, density);
    c.target_nodes_min = grow(target_nodes_min, density);
    c.target_nodes_max = grow(target_nodes_max, density);
    c.target_edges_min = grow(target_edges_min, factor);
    c.target_edges_max = grow(target_edges_max, factor);
    return c;
}

TimeSpaceGraph generate(const GenConfig& cfg) {
    if (cfg.n_stations < 2 || cfg.day_min < 0 || cfg.day_max >= 1440 ||
        cfg.day_min >= cfg.day_max || cfg.n_trains_min > cfg.n_trains_max ||
        cfg.travel_min > cfg.travel_max)
        throw Error("instance generator config is inconsistent");

    std::mt19937_64 rng(cfg.seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Trip> trips = roll_trips(cfg, rng);
        drop_uncoverable(cfg, trips);

        const int n_nodes = static_cast<int>(trips.size()) + 5;
        if (n_nodes < cfg.target_nodes_min || n_nodes > cfg.target_nodes_max) continue;

        TimeSpaceGraph g = assemble(cfg, std::move(trips));
        const int n_edges = static_cast<int>(g.edges.size());
        if (n_edges < cfg.target_edges_min || n_edges > cfg.target_edges_max) continue;
        return g;
    }
    throw GenerationExhausted("no instance hit the target node/edge ranges in 100 attempts");
}

EdgeCensus edge_census(const TimeSpaceGraph& g) {
    EdgeCensus c;
    for (const Edge& e : g.edges) {
        ++c.per_kind[static_cast<int>(e.kind)];
        ++c.total;
    }
    return c;
}

}  // namespace cgp
