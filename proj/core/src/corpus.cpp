#include "motgraph/corpus.hpp"

#include <map>

namespace motg::corpus {

namespace {

struct RawEdge {
  int src, dst;
  const char* label;
};

struct RawTerm {
  int coeff;
  std::vector<RawEdge> edges;
};

Graph build(int vertices, const std::vector<RawEdge>& edges) {
  Graph g;
  g.num_vertices = vertices;
  for (const RawEdge& e : edges)
    g.edges.push_back({e.src, e.dst, parse_monomial(e.label), +1});
  return validate_graph(g);
}

// Vertices in every weight-4 example: x=0, y=1, z=2, w=3; edge lists follow
// the order the summands are drawn in.
const std::map<std::string, std::vector<RawTerm>>& table() {
  static const std::map<std::string, std::vector<RawTerm>> t = {
      {"herbert4",
       {
           {1, {{0, 1, "1"}, {0, 2, "1"}, {3, 0, "1"}, {1, 3, "c"}, {1, 3, "d"}, {2, 3, "b"}, {2, 3, "a"}}},
           {1, {{0, 1, "1"}, {2, 0, "1"}, {0, 3, "b"}, {1, 3, "c"}, {1, 3, "d"}, {3, 2, "1"}, {2, 3, "a"}}},
           {1, {{0, 1, "1"}, {2, 0, "1"}, {0, 3, "d"}, {1, 3, "c"}, {1, 3, "b"}, {3, 2, "1"}, {2, 3, "a"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {0, 3, "a"}, {3, 1, "1"}, {1, 3, "d"}, {2, 3, "b"}, {2, 3, "c"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {0, 3, "c"}, {3, 1, "1"}, {1, 3, "d"}, {2, 3, "b"}, {2, 3, "a"}}},
       }},
      {"herbert4-variant",
       {
           {1, {{0, 1, "1"}, {0, 2, "1"}, {3, 0, "1"}, {1, 3, "c"}, {3, 1, "d"}, {3, 2, "b"}, {2, 3, "a"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {0, 3, "c"}, {3, 1, "d"}, {3, 1, "1"}, {3, 2, "b"}, {2, 3, "a"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {3, 0, "b"}, {3, 1, "1"}, {3, 1, "d"}, {2, 3, "a"}, {2, 3, "d"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {3, 0, "1"}, {3, 1, "d"}, {3, 1, "b"}, {2, 3, "c"}, {2, 3, "a"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {3, 0, "b"}, {1, 3, "c"}, {3, 1, "d"}, {2, 3, "a"}, {3, 2, "1"}}},
           {1, {{1, 0, "1"}, {0, 2, "1"}, {0, 3, "c"}, {3, 1, "d"}, {3, 1, "b"}, {2, 3, "a"}, {3, 2, "1"}}},
       }},
      {"slashedbox-6",
       {
           {1, {{2, 0, "1"}, {3, 1, "1"}, {0, 1, "a"}, {1, 0, "b"}, {1, 2, "1"}, {2, 3, "c"}, {3, 2, "d"}}},
           {1, {{2, 0, "1"}, {3, 1, "1"}, {0, 1, "a"}, {1, 0, "b"}, {2, 1, "c"}, {3, 2, "1"}, {3, 2, "d"}}},
           {1, {{2, 0, "1"}, {3, 1, "1"}, {0, 1, "a"}, {1, 0, "1"}, {1, 2, "b"}, {2, 3, "c"}, {3, 2, "d"}}},
           {1, {{2, 0, "1"}, {3, 1, "1"}, {0, 1, "c"}, {0, 1, "a"}, {1, 2, "b"}, {3, 2, "d"}, {3, 2, "1"}}},
           {1, {{2, 0, "1"}, {3, 1, "1"}, {0, 1, "a"}, {1, 0, "1"}, {2, 1, "c"}, {3, 2, "d"}, {3, 2, "b"}}},
           {1, {{2, 0, "1"}, {3, 1, "1"}, {0, 1, "a"}, {0, 1, "c"}, {1, 2, "1"}, {3, 2, "d"}, {3, 2, "b"}}},
       }},
      {"slashedbox-5",
       {
           {1, {{0, 1, "a"}, {1, 0, "1"}, {0, 2, "1"}, {2, 1, "d"}, {3, 1, "1"}, {2, 3, "c"}, {2, 3, "b"}}},
           {1, {{0, 1, "a"}, {1, 0, "1"}, {0, 2, "1"}, {2, 1, "b"}, {3, 1, "1"}, {2, 3, "c"}, {2, 3, "d"}}},
           {1, {{0, 1, "a"}, {0, 1, "b"}, {2, 0, "1"}, {1, 2, "1"}, {3, 1, "1"}, {2, 3, "c"}, {2, 3, "d"}}},
           {1, {{0, 1, "a"}, {0, 1, "b"}, {2, 0, "1"}, {2, 1, "c"}, {1, 3, "1"}, {3, 2, "1"}, {2, 3, "d"}}},
           {1, {{0, 1, "c"}, {0, 1, "b"}, {2, 0, "1"}, {2, 1, "a"}, {1, 3, "1"}, {3, 2, "1"}, {2, 3, "d"}}},
       }},
      {"necklace-4",
       {
           {1, {{0, 1, "1"}, {3, 1, "a"}, {1, 3, "b"}, {2, 0, "1"}, {0, 2, "c"}, {2, 3, "1"}, {3, 2, "d"}}},
           {-1, {{1, 0, "1"}, {3, 1, "a"}, {1, 3, "b"}, {2, 0, "1"}, {0, 2, "c"}, {2, 3, "1"}, {3, 2, "d"}}},
       }},
      {"sauron",
       {
           {1, {{1, 0, "c"}, {3, 1, "1"}, {0, 2, "1"}, {2, 3, "1"}, {0, 3, "a"}, {3, 0, "b"}, {1, 2, "d"}}},
           {1, {{1, 0, "1"}, {3, 1, "1"}, {0, 2, "c"}, {2, 3, "1"}, {3, 0, "a"}, {0, 3, "b"}, {1, 2, "d"}}},
           {1, {{0, 1, "1"}, {1, 0, "d"}, {1, 3, "c"}, {2, 0, "1"}, {2, 3, "b"}, {3, 2, "1"}, {3, 2, "a"}}},
           {1, {{0, 1, "1"}, {1, 0, "d"}, {1, 3, "1"}, {2, 0, "1"}, {3, 2, "b"}, {3, 2, "c"}, {2, 3, "a"}}},
           {1, {{1, 0, "c"}, {1, 0, "d"}, {3, 1, "1"}, {0, 2, "1"}, {3, 2, "b"}, {2, 3, "1"}, {2, 3, "a"}}},
           {1, {{0, 1, "1"}, {1, 0, "d*c"}, {1, 3, "1"}, {2, 0, "1"}, {3, 2, "b"}, {3, 2, "c"}, {2, 3, "a"}}},
       }},
  };
  return t;
}

}  // namespace

Graph five_edge_example() {
  return build(3, {{2, 0, "r1"}, {0, 2, "r2"}, {0, 1, "r3"}, {1, 2, "r4"}, {1, 0, "r5"}});
}

std::vector<std::pair<Rational, Graph>> five_edge_differential_terms() {
  // Each term: the graph left by contracting edge k (label moved onto the
  // source-vertex star, endpoints merged, blocks split), edges in the
  // induced order, with sign (-1)^(k-1).
  std::vector<std::pair<Rational, Graph>> out;
  out.push_back({1, build(3, {{0, 0, "r1*r2"}, {1, 2, "r3"}, {2, 1, "r1*r4"}, {2, 1, "r5"}})});
  out.push_back({-1, build(3, {{0, 0, "r1*r2"}, {1, 2, "r3/r2"}, {2, 1, "r4"}, {2, 1, "r2*r5"}})});
  out.push_back({1, build(3, {{1, 0, "r1*r3"}, {0, 1, "r2/r3"}, {0, 1, "r4"}, {2, 2, "r3*r5"}})});
  out.push_back({-1, build(2, {{1, 0, "r1"}, {0, 1, "r2"}, {0, 1, "r3*r4"}, {1, 0, "r5/r4"}})});
  out.push_back({1, build(3, {{1, 0, "r1"}, {0, 1, "r2"}, {2, 2, "r3*r5"}, {0, 1, "r4/r5"}})});
  return out;
}

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : table()) names.push_back(k);
  return names;
}

bool has_example(const std::string& name) { return table().count(name) > 0; }

std::vector<std::pair<Rational, Graph>> example_terms(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw Error("corpus: unknown example " + name);
  std::vector<std::pair<Rational, Graph>> out;
  for (const RawTerm& t : it->second) out.push_back({t.coeff, build(4, t.edges)});
  return out;
}

GraphSum example_sum(const std::string& name, const CanonicalOptions& opts) {
  GraphSum s;
  for (const auto& [c, g] : example_terms(name)) s.add_term(c, g, opts);
  return s;
}

}  // namespace motg::corpus
