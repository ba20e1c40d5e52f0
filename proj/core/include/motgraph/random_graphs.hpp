#ifndef MOTGRAPH_RANDOM_GRAPHS_HPP
#define MOTGRAPH_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>

#include "motgraph/graph.hpp"

namespace motg {

/// Seed taken from MOTGRAPH_SEED when set, else the given default.
uint64_t seed_from_env(uint64_t fallback = 0x6d6f7467);

struct RandomGraphConfig {
  int max_vertices = 6;
  int max_edges = 9;
  int num_symbols = 6;
  bool require_admissible = true;
  int max_retries = 200;
};

/// Random strongly connected multigraph with monomial labels; retries until
/// the admissibility test passes when required.
Graph random_graph(std::mt19937_64& rng, const RandomGraphConfig& cfg = {});

/// Random monomial over the configured symbol pool (generators g0..g<k>).
Monomial random_monomial(std::mt19937_64& rng, int num_symbols, int max_exp = 2);

}  // namespace motg

#endif
