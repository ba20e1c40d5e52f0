#ifndef MOTGRAPH_GRAPH_HPP
#define MOTGRAPH_GRAPH_HPP

#include <string>
#include <vector>

#include "motgraph/monomial.hpp"

namespace motg {

/// Oriented labeled edge.  `sign` is the extra Z/2 attribute carried by each
/// edge position, normalized to +1 by canonicalization.
struct Edge {
  int src = 0;
  int dst = 0;
  Monomial label;
  int sign = +1;

  bool is_self_loop() const { return src == dst; }
};

/// A graph with ordered edges: the position of an edge in `edges` is its
/// place in the edge order (1-based in formulas, 0-based in code).
struct Graph {
  int num_vertices = 0;
  std::vector<Edge> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  bool empty() const { return num_vertices == 0 && edges.empty(); }
};

/// Checks vertex indices, isolated vertices, nonzero labels and sign values.
/// Returns the graph unchanged; throws InvalidGraph listing every violation.
Graph validate_graph(const Graph& g);

Graph make_graph(int num_vertices,
                 std::vector<std::tuple<int, int, std::string>> edges);

/// Disjoint union with `b`'s edges appended after `a`'s (the ordered product).
Graph concat(const Graph& a, const Graph& b);

/// Connected components of the underlying undirected multigraph.
/// Returns component index per vertex and the component count.
std::pair<std::vector<int>, int> components(const Graph& g);

int betti0(const Graph& g);
int betti1(const Graph& g);

/// Algebraic degree h1 - |V| + h0; weight is betti1.
int degree(const Graph& g);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace motg

#endif
