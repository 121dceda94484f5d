#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cgp/graph.hpp"

namespace cgp {

// Seeded random generator of crew-scheduling instances on a single railway
// line. Trains run between random terminals with random intermediate stops;
// every consecutive-stop segment becomes one trip. The two end stations of
// the line act as crew bases. Deterministic: equal configs (including seed)
// produce identical instances.

struct GenConfig {
    std::uint64_t seed = 0;
    int n_stations = 5;
    int n_trains_min = 56;
    int n_trains_max = 72;
    int day_min = 300;    // 05:00
    int day_max = 1380;   // 23:00
    int travel_min = 20;  // per adjacent station pair, minutes
    int travel_max = 40;
    int target_nodes_min = 80;
    int target_nodes_max = 140;
    int target_edges_min = 700;
    int target_edges_max = 2000;
    double stop_prob = 0.45;  // chance an intermediate station becomes a stop

    // Scales train density so the expected edge count grows by `factor`.
    // Connection edges pair up trips, so density itself grows by sqrt(factor).
    GenConfig scaled(double factor) const;
};

struct EdgeCensus {
    std::array<int, 4> per_kind{};  // indexed by EdgeKind
    int total = 0;

    int operator[](EdgeKind k) const { return per_kind[static_cast<int>(k)]; }
};

// Generates an instance whose node count lies in the configured target range,
// redrawing internally up to 100 times. The result always passes
// validate_graph, and every trip lies on at least one feasible duty.
// Throws GenerationExhausted if the config cannot hit the node range.
TimeSpaceGraph generate(const GenConfig& cfg);

EdgeCensus edge_census(const TimeSpaceGraph& g);

}  // namespace cgp
