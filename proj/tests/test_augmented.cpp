#include <doctest.h>

#include "motgraph/circular.hpp"
#include "motgraph/corpus.hpp"

using namespace motg;

namespace {

Monomial sym(const std::string& s) { return Monomial::symbol(s); }

std::vector<Monomial> bead_symbols(int n) {
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i) out.push_back(sym("a" + std::to_string(i)));
  return out;
}

/// The 2-dimensional augmentation of the bead ring: top edge a0/t2, last
/// bead twisted by t2/t1.
AugGraph ring_sigma2(NecklaceKind kind, int n) {
  std::vector<Monomial> beads = bead_symbols(n);
  beads[n - 1] = beads[n - 1] * sym("t2") * sym("t1").inverse();
  Monomial top = sym("a0") * sym("t2").inverse();
  if (kind == NecklaceKind::Right) top = top.inverse();
  return AugGraph{make_necklace(kind, top, beads), 2};
}

AugSum eps_sigma2(int n) {
  AugSum s;
  s.add_term(1, ring_sigma2(NecklaceKind::Left, n));
  s.add_term(-1, ring_sigma2(NecklaceKind::Right, n));
  return s;
}

}  // namespace

TEST_CASE("face maps of the 2-dimensional bead ring") {
  int n = 2;
  AugGraph a = ring_sigma2(NecklaceKind::Left, n);
  CHECK(a.twisted_degree() == 1 - 2);

  // face 0 sends t1 to 0: the twisted bead label blows up, the term is trivial
  CHECK(delta_face(a, 0).trivial);

  // face 1 identifies t1 and t2: the twist cancels to a plain bead
  FaceResult f1 = delta_face(a, 1);
  REQUIRE_FALSE(f1.trivial);
  CHECK(f1.value.simplex_dim == 1);
  {
    std::vector<Monomial> beads = bead_symbols(n);
    Graph expect = make_necklace(NecklaceKind::Left, sym("a0") * sym("t1").inverse(), beads);
    CHECK(canonical_aug(1, f1.value).key == canonical_aug(1, AugGraph{expect, 1}).key);
  }

  // face 2 sets t2 to 1: constant top, bead keeps 1/t1
  FaceResult f2 = delta_face(a, 2);
  REQUIRE_FALSE(f2.trivial);
  {
    std::vector<Monomial> beads = bead_symbols(n);
    beads[n - 1] = beads[n - 1] * sym("t1").inverse();
    Graph expect = make_necklace(NecklaceKind::Left, sym("a0"), beads);
    CHECK(canonical_aug(1, f2.value).key == canonical_aug(1, AugGraph{expect, 1}).key);
  }
}

TEST_CASE("delta and partial raise the twisted degree by one") {
  AugGraph a = ring_sigma2(NecklaceKind::Left, 2);
  int base = a.twisted_degree();
  AugDelta d = aug_delta(a);
  for (const auto& [k, t] : d.sum.terms()) CHECK(t.rep.twisted_degree() == base + 1);
  AugSum p = aug_partial(a);
  for (const auto& [k, t] : p.terms()) CHECK(t.rep.twisted_degree() == base + 1);
}

TEST_CASE("delta squared and partial squared vanish on the bead family") {
  for (int n = 1; n <= 3; ++n) {
    AugSum eps = eps_sigma2(n);
    CHECK(aug_delta(aug_delta(eps).sum).sum.empty());
    CHECK(aug_partial(aug_partial(eps)).empty());
  }
  // and on the sigma/rho layers at n = 2
  XiFamily fam = make_xi_family(sym("a0"), bead_symbols(2));
  for (const AugSum& s : fam.lambda) {
    CHECK(aug_delta(aug_delta(s).sum).sum.empty());
    CHECK(aug_partial(aug_partial(s)).empty());
  }
}

TEST_CASE("constant augmentation inclusion commutes with the differential") {
  Graph g = corpus::five_edge_example();
  AugGraph a{g, 0};
  AugSum dp = aug_partial(a);
  GraphSum d = differential(g);
  REQUIRE(dp.terms().size() == d.terms().size());
  auto it = dp.terms().begin();
  for (const auto& [k, t] : d.terms()) {
    CHECK(it->first == "m0#" + k);
    CHECK(it->second.coeff == t.coeff);
    ++it;
  }
  // constant augmentation has no faces
  CHECK(aug_delta(a).sum.empty());
}

TEST_CASE("augmentation admissibility") {
  // the necklaceinT1L augmentation is valid
  AugGraph good = ring_sigma2(NecklaceKind::Left, 2);
  CHECK(aug_validate(good).valid);

  // a lone t1 label dies at the zero face with no compensating pole
  Graph g = make_graph(2, {{0, 1, "a*t1"}, {1, 0, "b"}});
  AugValidationReport bad = aug_validate(AugGraph{g, 1});
  CHECK_FALSE(bad.valid);

  // a constant augmentation of an admissible graph is valid
  CHECK(aug_validate(AugGraph{corpus::five_edge_example(), 0}).valid);
}

TEST_CASE("circular closure for the augmented bead element") {
  for (int n = 0; n <= 2; ++n) {
    CAPTURE(n);
    ClosureReport rep = verify_circular_closure(n);
    CHECK(rep.closed);
    if (!rep.closed) MESSAGE(rep.residue);
    CHECK(rep.identity_alg1);
    CHECK(rep.identity_alg2);
    CHECK(rep.identity_topo1);
    CHECK(rep.identity_topo2);
  }
}
