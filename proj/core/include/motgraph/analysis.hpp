#ifndef MOTGRAPH_ANALYSIS_HPP
#define MOTGRAPH_ANALYSIS_HPP

#include <set>
#include <vector>

#include "motgraph/graph.hpp"

namespace motg {

/// A closed walk given as (edge index, direction) steps; direction +1 means
/// the edge is traversed from src to dst.
struct Loop {
  std::vector<std::pair<int, int>> steps;

  int length() const { return static_cast<int>(steps.size()); }
};

/// Loop coefficient: product over the loop's steps of label^direction.
Monomial loop_coefficient(const Graph& g, const Loop& loop);

struct StructureReport {
  int h0 = 0;
  int h1 = 0;
  std::vector<int> component_of_vertex;
  std::vector<bool> strongly_connected;  // per component
  bool all_strongly_connected = true;
  std::set<int> articulation_vertices;
  std::vector<Graph> biconnected_pieces;  // edge order, labels, signs inherited
};

StructureReport structure(const Graph& g);

struct LoopData {
  std::vector<int> forest_edges;    // indices into g.edges
  std::vector<Loop> fundamental;    // one loop per non-forest edge
  std::vector<Monomial> chi;        // loop coefficient per fundamental loop
};

/// Spanning forest by BFS from the lowest-index vertex of each component,
/// tie-breaking by (neighbor index, edge position); fundamental loops are
/// oriented along their defining non-forest edge.
LoopData loop_data(const Graph& g);

/// Every simple cycle of the underlying undirected multigraph, one
/// representative per traversal direction and starting point.  Includes
/// length-1 self-loops and length-2 parallel-edge cycles.
std::vector<Loop> enumerate_simple_cycles(const Graph& g, long budget = 1000000);

struct Handle {
  std::vector<int> edge_path;  // >= 2 edges, interior vertices 2-valent
};

struct HandleDecomposition {
  std::vector<Handle> handles;
  Graph interior;                  // g with all handle edges removed
  std::vector<int> interior_edges; // indices into g.edges
  bool degenerate_cycle = false;   // a whole component is a 2-valent cycle
};

HandleDecomposition handle_decomposition(const Graph& g);

/// Splits every connected component into its biconnected pieces, duplicating
/// articulation vertices; edges keep their relative order.  Self-loops form
/// their own piece.  Isolated vertices left by the split are dropped.
Graph split_biconnected(const Graph& g);

/// Merge the endpoints of edge `e` (which must not be a self-loop) and drop
/// the edge; remaining edges keep their relative order.
Graph contract_merge(const Graph& g, int e);

}  // namespace motg

#endif
