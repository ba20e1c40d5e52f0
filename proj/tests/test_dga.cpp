#include <doctest.h>

#include <random>

#include "motgraph/corpus.hpp"
#include "motgraph/dga.hpp"
#include "motgraph/necklace.hpp"
#include "motgraph/random_graphs.hpp"

using namespace motg;

TEST_CASE("contract_edge basics") {
  // self-loop contracts to zero
  Graph loop = make_graph(1, {{0, 0, "a"}});
  CHECK_FALSE(contract_edge(loop, 0).has_value());

  // unit label: plain contraction, labels untouched
  Graph g = make_graph(3, {{0, 1, "1"}, {1, 2, "b"}, {2, 0, "c"}, {0, 1, "d"}});
  auto c = contract_edge(g, 0);
  REQUIRE(c.has_value());
  std::multiset<std::string> labels;
  for (const Edge& e : c->edges) labels.insert(e.label.str());
  CHECK(labels == std::multiset<std::string>{"1*b", "1*c", "1*d"});

  // target-side contraction agrees up to vertex rescaling
  Graph h = corpus::five_edge_example();
  for (int e = 0; e < h.num_edges(); ++e) {
    auto src_side = contract_edge(h, e);
    REQUIRE(src_side.has_value());
    Graph target_side_input = vertex_rescale(h, h.edges[e].dst, h.edges[e].label.inverse());
    Graph merged = contract_merge(target_side_input, e);
    Graph split = split_biconnected(merged);
    CHECK(canonical_form(1, *src_side).key == canonical_form(1, split).key);
    CHECK(canonical_form(1, *src_side).coeff == canonical_form(1, split).coeff);
  }
}

TEST_CASE("the worked five-term differential") {
  GraphSum d = differential(corpus::five_edge_example());
  GraphSum expected;
  for (const auto& [coeff, graph] : corpus::five_edge_differential_terms())
    expected.add_term(coeff, graph);
  CHECK(d == expected);
  CHECK(d.size() == 5);
}

TEST_CASE("differential bigrading: degree +1, weight fixed") {
  std::mt19937_64 rng(seed_from_env(43));
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(rng);
    Bigrade in = bigrade(g);
    for (const auto& [k, t] : differential(g).terms()) {
      CHECK(betti1(t.rep) == in.weight);
      CHECK(degree(t.rep) == in.degree + 1);
    }
  }
}

TEST_CASE("d sq is zero") {
  std::mt19937_64 rng(seed_from_env(47));
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng);
    CHECK(differential(differential(g)).empty());
  }
  CHECK(differential(differential(corpus::five_edge_example())).empty());
}

TEST_CASE("Leibniz rule") {
  std::mt19937_64 rng(seed_from_env(53));
  RandomGraphConfig cfg;
  cfg.max_vertices = 3;
  cfg.max_edges = 4;
  for (int it = 0; it < 20; ++it) {
    Graph g = random_graph(rng, cfg);
    Graph h = random_graph(rng, cfg);
    GraphSum a = GraphSum::of(1, g), b = GraphSum::of(1, h);
    if (a.empty() || b.empty()) continue;
    GraphSum lhs = differential(a.product(b));
    Rational koszul = degree(g) % 2 == 0 ? 1 : -1;
    GraphSum rhs = differential(a).product(b) + a.product(differential(b)) * koszul;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("differential of the one-edge loop vanishes") {
  CHECK(differential(make_loop_graph(Monomial::symbol("a"))).empty());
}

TEST_CASE("admissibility verdicts") {
  // unit loop: a 2-gon with labels multiplying to 1
  Graph unit = make_graph(2, {{0, 1, "a"}, {1, 0, "1/a"}});
  AdmissibilityReport r = is_admissible(unit);
  CHECK_FALSE(r.admissible);
  CHECK_FALSE(r.unit_loops.empty());

  Graph loop = make_loop_graph(Monomial::symbol("a"));
  CHECK(is_admissible(loop).admissible);

  Graph sink = make_graph(2, {{0, 1, "a"}, {0, 1, "b"}});
  AdmissibilityReport s = is_admissible(sink);
  CHECK_FALSE(s.admissible);
  CHECK_FALSE(s.not_strongly_connected.empty());

  // necklaces with generic symbols
  std::vector<Monomial> beads{Monomial::symbol("a1"), Monomial::symbol("a2")};
  CHECK(is_admissible(make_necklace(NecklaceKind::Left, Monomial::symbol("a0"), beads))
            .admissible);
  // admissibility is preserved by the differential
  GraphSum d = differential(make_necklace(NecklaceKind::Left, Monomial::symbol("a0"), beads));
  for (const auto& [k, t] : d.terms()) CHECK(is_admissible(t.rep).admissible);
  // all worked example summands are admissible
  for (const auto& name : corpus::example_names())
    for (const auto& [c, g] : corpus::example_terms(name))
      CHECK(is_admissible(g).admissible);
}

TEST_CASE("strict unit loop search sees composite relations") {
  // fundamental loop coefficients a^2 and a^3: no simple cycle is unit, but
  // 3*(first) - 2*(second) multiplies to 1
  Graph g = make_graph(2, {{0, 1, "1"}, {1, 0, "a^2"}, {1, 0, "a^3"}});
  CHECK(is_admissible(g).admissible);
  StrictLoopCheck strict = strict_unit_loop_search(g);
  CHECK(strict.unit_found);

  Graph ok = make_graph(2, {{0, 1, "1"}, {1, 0, "a"}, {0, 1, "b"}});
  CHECK_FALSE(strict_unit_loop_search(ok).unit_found);
}

TEST_CASE("handle split of the differential") {
  // theta with one edge subdivided k times: handle of length k+1
  auto subdivided_theta = [&](int k) {
    // path 0 - 2 - 3 - ... of k+1 edges replacing one theta edge
    Graph g;
    g.num_vertices = 2 + k;
    g.edges.push_back({0, 1, Monomial::symbol("b"), +1});
    g.edges.push_back({1, 0, Monomial::symbol("c"), +1});
    int prev = 0;
    for (int i = 0; i < k; ++i) {
      g.edges.push_back({prev, 2 + i, Monomial::symbol("h" + std::to_string(i)), +1});
      prev = 2 + i;
    }
    g.edges.push_back({prev, 1, Monomial::symbol("h" + std::to_string(k)), +1});
    return validate_graph(g);
  };
  for (int k = 1; k <= 4; ++k) {
    Graph g = subdivided_theta(k);
    int handle_len = k + 1;
    HandleDecomposition hd = handle_decomposition(g);
    REQUIRE(hd.handles.size() == 1);
    REQUIRE(static_cast<int>(hd.handles[0].edge_path.size()) == handle_len);
    HandleSplit split = differential_handle_split(g);
    GraphSum full = differential(g);
    CHECK(split.handle_part + split.interior_part == full);
    if (handle_len % 2 == 0) {
      CHECK(split.handle_part.empty());
    } else {
      CHECK(split.handle_part.size() == 1);
      // the surviving term is the first handle edge's contraction
      int e1 = hd.handles[0].edge_path.front();
      auto c = contract_edge(g, e1);
      REQUIRE(c.has_value());
      GraphSum expect = GraphSum::of(e1 % 2 == 0 ? 1 : -1, *c);
      CHECK(split.handle_part == expect);
    }
  }
  // handle-free graph: everything is interior
  Graph g = corpus::five_edge_example();
  HandleSplit split = differential_handle_split(g);
  CHECK(split.handle_part.empty());
  CHECK(split.interior_part == differential(g));
}

TEST_CASE("dot zero predicate") {
  CHECK(is_dot_zero(GraphSum{}).dot_zero);
  GraphSum herbert = corpus::example_sum("herbert4");
  CHECK(is_dot_zero(differential(herbert)).dot_zero);
  std::vector<Monomial> beads{Monomial::symbol("a1"), Monomial::symbol("a2")};
  GraphSum single =
      GraphSum::of(1, make_necklace(NecklaceKind::Left, Monomial::symbol("a0"), beads));
  DotZeroReport rep = is_dot_zero(differential(single));
  CHECK_FALSE(rep.dot_zero);
  CHECK_FALSE(rep.connected_survivors.empty());
}
