#include "motgraph/random_graphs.hpp"

#include <cstdlib>

#include "motgraph/dga.hpp"

namespace motg {

uint64_t seed_from_env(uint64_t fallback) {
  if (const char* s = std::getenv("MOTGRAPH_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
  }
  return fallback;
}

Monomial random_monomial(std::mt19937_64& rng, int num_symbols, int max_exp) {
  std::uniform_int_distribution<int> sym(0, num_symbols - 1);
  std::uniform_int_distribution<int> nfac(1, 2);
  std::uniform_int_distribution<int> expd(1, max_exp);
  std::uniform_int_distribution<int> coin(0, 1);
  Monomial m;
  int facs = nfac(rng);
  for (int i = 0; i < facs; ++i) {
    int e = expd(rng) * (coin(rng) ? 1 : -1);
    m = m * Monomial::symbol("g" + std::to_string(sym(rng)), e);
  }
  std::uniform_int_distribution<int> cd(1, 3);
  Rational c(cd(rng));
  if (coin(rng)) c = Rational(1) / c;
  return Monomial(c) * m;
}

Graph random_graph(std::mt19937_64& rng, const RandomGraphConfig& cfg) {
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    std::uniform_int_distribution<int> nv(1, cfg.max_vertices);
    int n = nv(rng);
    int min_edges = n >= 2 ? n : 1;
    std::uniform_int_distribution<int> ne(min_edges, std::max(min_edges, cfg.max_edges));
    int m = ne(rng);

    Graph g;
    g.num_vertices = n;
    // a directed Hamiltonian cycle keeps every vertex strongly connected
    if (n >= 2) {
      for (int v = 0; v < n; ++v)
        g.edges.push_back({v, (v + 1) % n, random_monomial(rng, cfg.num_symbols), +1});
    } else {
      g.edges.push_back({0, 0, random_monomial(rng, cfg.num_symbols), +1});
    }
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::uniform_int_distribution<int> signd(0, 1);
    while (g.num_edges() < m) {
      int s = vd(rng), d = vd(rng);
      g.edges.push_back({s, d, random_monomial(rng, cfg.num_symbols),
                         signd(rng) ? +1 : -1});
    }
    // shuffle the edge order so positions are not structured
    std::shuffle(g.edges.begin(), g.edges.end(), rng);

    if (!cfg.require_admissible) return g;
    try {
      if (is_admissible(g).admissible) return g;
    } catch (const BudgetExceeded&) {
    }
  }
  throw Error("random_graph: could not generate an admissible graph");
}

}  // namespace motg
