#include "motgraph/necklace.hpp"

#include <algorithm>

namespace motg {

Graph make_loop_graph(const Monomial& a) {
  Graph g;
  g.num_vertices = 1;
  g.edges.push_back({0, 0, a, +1});
  return g;
}

Graph make_necklace(NecklaceKind kind, const Monomial& a0,
                    const std::vector<Monomial>& beads) {
  int n = static_cast<int>(beads.size());
  if (n == 0) return make_loop_graph(a0);
  Graph g;
  g.num_vertices = n + 1;  // junctions v_0..v_n
  if (kind == NecklaceKind::Left)
    g.edges.push_back({n, 0, a0, +1});
  else
    g.edges.push_back({0, n, a0, +1});
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({i, i - 1, Monomial::one(), +1});  // position 2i
    g.edges.push_back({i - 1, i, beads[i - 1], +1});     // position 2i+1
  }
  return g;
}

GraphSum make_eps(const Monomial& a0, const std::vector<Monomial>& beads,
                  const CanonicalOptions& opts) {
  GraphSum s;
  s.add_term(1, make_necklace(NecklaceKind::Left, a0, beads), opts);
  s.add_term(-1, make_necklace(NecklaceKind::Right, a0.inverse(), beads), opts);
  return s;
}

BarElement make_bold_eps(const Monomial& a0, const std::vector<Monomial>& beads,
                         const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  BarElement out;
  for (unsigned s_mask = 0; s_mask < (1u << n); ++s_mask) {
    std::vector<int> s_set, rest;
    for (int i = 0; i < n; ++i)
      (s_mask & (1u << i) ? s_set : rest).push_back(i);
    Rational s_sign = (s_set.size() % 2 == 0) ? 1 : -1;

    std::vector<Monomial> kept;
    for (int i : rest) kept.push_back(beads[i]);

    // inner alternating sum over J subsets of S, scaling the top label
    unsigned k = static_cast<unsigned>(s_set.size());
    for (unsigned j_mask = 0; j_mask < (1u << k); ++j_mask) {
      Monomial top = a0;
      int jbits = 0;
      for (unsigned t = 0; t < k; ++t)
        if (j_mask & (1u << t)) {
          top = top * beads[s_set[t]];
          ++jbits;
        }
      Rational j_sign = (jbits % 2 == 0) ? 1 : -1;
      GraphSum head = make_eps(top, kept, opts);

      // shuffle of the extracted one-edge loops: all orders, coefficient 1
      std::vector<int> order = s_set;
      std::sort(order.begin(), order.end());
      do {
        for (const auto& [key, term] : head.terms()) {
          std::vector<Graph> word{term.rep};
          for (int i : order) word.push_back(make_loop_graph(beads[i]));
          out.add_graphs(word, s_sign * j_sign * term.coeff, opts);
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return out;
}

}  // namespace motg
