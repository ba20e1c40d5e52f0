#ifndef MOTGRAPH_DGA_HPP
#define MOTGRAPH_DGA_HPP

#include <optional>

#include "motgraph/graphsum.hpp"

namespace motg {

/// Edge contraction with the label-moving rule: rescale the source vertex of
/// the edge by its label (so the edge carries 1), merge the endpoints, drop
/// the edge from the order, and split the result at articulation vertices.
/// Self-loops contract to zero (nullopt).
std::optional<Graph> contract_edge(const Graph& g, int e);

/// The degree-1 differential: per representative,
/// dG = sum_e (-1)^(pos(e)-1) contract_edge(G, e), canonicalized.
GraphSum differential(const GraphSum& s, const CanonicalOptions& opts = {});
GraphSum differential(const Graph& g, const CanonicalOptions& opts = {});

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<int> not_strongly_connected;  // component indices
  std::vector<Loop> unit_loops;
  std::string summary() const;
};

/// Graphical admissibility: strongly connected components and no simple
/// cycle with loop coefficient 1 (one traversal direction suffices).
AdmissibilityReport is_admissible(const Graph& g, long cycle_budget = 1000000);

/// Strict variant of the unit-loop check: also search for a nontrivial
/// integer combination of fundamental loop coefficients multiplying to 1,
/// with exponents bounded by `box`.
struct StrictLoopCheck {
  bool unit_found = false;
  std::vector<int> exponents;  // per fundamental loop when found
};
StrictLoopCheck strict_unit_loop_search(const Graph& g, int box = 3);

/// Splits dG into the contributions of handle edges and interior edges.
struct HandleSplit {
  GraphSum handle_part;
  GraphSum interior_part;
};
HandleSplit differential_handle_split(const Graph& g, const CanonicalOptions& opts = {});

/// True iff every term of the sum is a disconnected graph; the surviving
/// connected part is returned alongside.
struct DotZeroReport {
  bool dot_zero = true;
  GraphSum connected_survivors;
};
DotZeroReport is_dot_zero(const GraphSum& s);

}  // namespace motg

#endif
