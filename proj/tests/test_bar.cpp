#include <doctest.h>

#include <random>

#include "motgraph/bar.hpp"
#include "motgraph/corpus.hpp"
#include "motgraph/necklace.hpp"
#include "motgraph/random_graphs.hpp"

using namespace motg;

namespace {

Monomial sym(const std::string& s) { return Monomial::symbol(s); }

std::vector<Monomial> bead_symbols(int n) {
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i) out.push_back(sym("a" + std::to_string(i)));
  return out;
}

BarElement random_bar_element(std::mt19937_64& rng, int max_words, int max_len) {
  RandomGraphConfig cfg;
  cfg.max_vertices = 3;
  cfg.max_edges = 4;
  BarElement e;
  std::uniform_int_distribution<int> words(1, max_words), len(1, max_len),
      coeff(-3, 3);
  int w = words(rng);
  for (int i = 0; i < w; ++i) {
    std::vector<Graph> gs;
    int l = len(rng);
    for (int j = 0; j < l; ++j) gs.push_back(random_graph(rng, cfg));
    int c = coeff(rng);
    if (c == 0) c = 1;
    e.add_graphs(gs, c);
  }
  return e;
}

}  // namespace

TEST_CASE("mu kills shuffles of degree-1 factors") {
  std::mt19937_64 rng(seed_from_env(59));
  RandomGraphConfig cfg;
  cfg.max_vertices = 3;
  cfg.max_edges = 4;
  for (int it = 0; it < 10; ++it) {
    Graph a = random_graph(rng, cfg);
    Graph b = random_graph(rng, cfg);
    if (degree(a) != 1 || degree(b) != 1) continue;
    BarElement shuffle;
    shuffle.add_graphs({a, b}, 1);
    shuffle.add_graphs({b, a}, 1);
    CHECK(bar_mu(shuffle).empty());
  }
}

TEST_CASE("mu of a two-factor word of degree-1 graphs is minus the product") {
  Graph a = make_loop_graph(sym("p"));
  Graph b = make_loop_graph(sym("q"));
  BarElement w;
  w.add_graphs({a, b}, 1);
  BarElement m = bar_mu(w);
  BarElement expect;
  expect.add_graphs({concat(a, b)}, -1);
  CHECK(m == expect);
  // single-factor words have no adjacent pair
  BarElement single;
  single.add_graphs({a}, 1);
  CHECK(bar_mu(single).empty());
}

TEST_CASE("bar differentials square to zero and anticommute") {
  std::mt19937_64 rng(seed_from_env(61));
  for (int it = 0; it < 8; ++it) {
    BarElement e = random_bar_element(rng, 3, 3);
    BarElement dd = bar_partial(bar_partial(e));
    CHECK(dd.empty());
    BarElement mm = bar_mu(bar_mu(e));
    CHECK(mm.empty());
    BarElement cross = bar_partial(bar_mu(e)) + bar_mu(bar_partial(e));
    CHECK(cross.empty());
    BarElement total = bar_partial(e) + bar_mu(e);
    CHECK((bar_partial(total) + bar_mu(total)).empty());
  }
}

TEST_CASE("bar partial of a closed single-factor word is empty") {
  GraphSum loop = GraphSum::of(1, make_loop_graph(sym("a")));
  BarElement e = BarElement::from_sum(loop);
  CHECK(bar_partial(e).empty());
}

TEST_CASE("decomposability of the worked sums") {
  for (const auto& name : corpus::example_names()) {
    CAPTURE(name);
    GraphSum s = corpus::example_sum(name);
    DecomposabilityResult r = check_completely_decomposable(s);
    CHECK(r.decomposable);
  }
}

TEST_CASE("decomposability of the bead family") {
  for (int n = 0; n <= 3; ++n) {
    GraphSum eps = make_eps(sym("a0"), bead_symbols(n));
    DecomposabilityResult r = check_completely_decomposable(eps);
    CHECK(r.decomposable);
  }
  // single ring graphs with two or more beads are not decomposable
  for (int n = 2; n <= 3; ++n) {
    GraphSum single =
        GraphSum::of(1, make_necklace(NecklaceKind::Left, sym("a0"), bead_symbols(n)));
    DecomposabilityResult r = check_completely_decomposable(single);
    CHECK_FALSE(r.decomposable);
    CHECK_FALSE(r.failing_connected.empty());
  }
}

TEST_CASE("boundary formula for the bead family") {
  // d eps^n = -sum_i (eps^{n-1}(a0, a\i) - eps^{n-1}(a0*a_i, a\i)) * G0(a_i)
  for (int n = 1; n <= 3; ++n) {
    auto beads = bead_symbols(n);
    GraphSum lhs = differential(make_eps(sym("a0"), beads));
    GraphSum rhs;
    for (int i = 1; i <= n; ++i) {
      std::vector<Monomial> rest;
      for (int j = 1; j <= n; ++j)
        if (j != i) rest.push_back(beads[j - 1]);
      GraphSum diff = make_eps(sym("a0"), rest) -
                      make_eps(sym("a0") * beads[i - 1], rest);
      rhs = rhs + diff.product(GraphSum::of(1, make_loop_graph(beads[i - 1])));
    }
    CHECK(lhs == rhs * Rational(-1));
  }
}

TEST_CASE("bold bead element is closed") {
  for (int n = 0; n <= 3; ++n) {
    BarElement bold = make_bold_eps(sym("a0"), bead_symbols(n));
    BarElement d = bar_partial(bold) + bar_mu(bold);
    CAPTURE(n);
    CHECK(d.empty());
  }
}

TEST_CASE("lift reproduces a closed element") {
  for (int n = 0; n <= 2; ++n) {
    GraphSum eps = make_eps(sym("a0"), bead_symbols(n));
    BarElement lifted = lift_to_bar_closure(eps);
    CHECK((bar_partial(lifted) + bar_mu(lifted)).empty());
    // single-factor part is [eps]
    for (const auto& [k, t] : eps.terms()) {
      BarWord w{k};
      REQUIRE(lifted.terms().count(w) == 1);
      CHECK(lifted.terms().at(w) == t.coeff);
    }
  }
}

TEST_CASE("lift of the worked sums is closed") {
  for (const std::string name : {"herbert4", "slashedbox-6"}) {
    CAPTURE(name);
    GraphSum s = corpus::example_sum(name);
    BarElement lifted = lift_to_bar_closure(s);
    CHECK((bar_partial(lifted) + bar_mu(lifted)).empty());
  }
}

TEST_CASE("coboundary witness search") {
  // eta: weight 2, degree 0 (triangle with a parallel edge)
  Graph eta = make_graph(3, {{0, 1, "p"}, {1, 2, "q"}, {2, 0, "r"}, {0, 1, "s"}});
  GraphSum etas = GraphSum::of(1, eta);
  GraphSum eps = differential(etas).connected_part();
  REQUIRE_FALSE(eps.empty());
  WitnessResult w = coboundary_witness_search(eps, {etas});
  REQUIRE(w.found);
  CHECK(w.coefficients[0] == 1);
  CHECK_FALSE(coboundary_witness_search(eps, {}).found);

  // a decoy candidate does not obstruct the solve
  Graph decoy = make_graph(3, {{0, 1, "u"}, {1, 2, "v"}, {2, 0, "w"}, {1, 2, "x"}});
  WitnessResult w2 = coboundary_witness_search(eps, {GraphSum::of(1, decoy), etas});
  REQUIRE(w2.found);
  GraphSum combo = GraphSum::of(w2.coefficients[0], decoy);
  combo = combo + etas * w2.coefficients[1];
  CHECK(differential(combo).connected_part() == eps);
}
