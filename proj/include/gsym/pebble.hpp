#ifndef GSYM_PEBBLE_HPP
#define GSYM_PEBBLE_HPP

#include <vector>

#include "gsym/graph.hpp"
#include "gsym/minors.hpp"

namespace gsym {

struct PebbleMove {
    int pebble;
    int from;
    int to; // the gap before the move
};

// n-1 labeled pebbles on an n-vertex host, one vertex free. Every legal move
// slides a pebble along an edge onto the gap. A complete plan makes every
// pebble pair adjacent at some time step (time 0 counts).
struct PebblePlan {
    Graph host;
    std::vector<int> initial; // pebble id -> starting vertex
    int initial_gap = -1;
    std::vector<PebbleMove> moves;
};

struct ReplayResult {
    bool legal = false;
    std::vector<std::vector<char>> met; // pebble pair adjacency witnesses
    bool all_met = false;
};

ReplayResult replay_and_validate(const PebblePlan& plan);

// Solves the puzzle for 2-connected non-cycle hosts with n >= 4; greedy
// per-pair breadth-first search through configuration space.
PebblePlan solve_pebble(const Graph& h);

// Compiles a valid plan into a K_{n-1} minor model inside host x P_L.
MinorModel plan_to_minor_model(const PebblePlan& plan);

} // namespace gsym

#endif
