#include "motgraph/augmented.hpp"

#include <sstream>

namespace motg {

CanonicalAugTerm canonical_aug(const Rational& coeff, const AugGraph& a,
                               const CanonicalOptions& opts) {
  CanonicalTerm t = canonical_form(coeff, a.graph, opts);
  CanonicalAugTerm out;
  if (t.zero) {
    out.zero = true;
    return out;
  }
  out.key = "m" + std::to_string(a.simplex_dim) + "#" + t.key;
  out.coeff = t.coeff;
  out.representative = {t.representative, a.simplex_dim};
  return out;
}

AugSum AugSum::of(const Rational& c, const AugGraph& a, const CanonicalOptions& opts) {
  AugSum s;
  s.add_term(c, a, opts);
  return s;
}

void AugSum::add_term(const Rational& c, const AugGraph& a, const CanonicalOptions& opts) {
  if (c == 0) return;
  CanonicalAugTerm t = canonical_aug(c, a, opts);
  if (t.zero) return;
  add_canonical(t.key, t.coeff, t.representative);
}

void AugSum::add_canonical(const std::string& key, const Rational& c, const AugGraph& rep) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, AugTerm{c, rep});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

AugSum AugSum::operator+(const AugSum& o) const {
  AugSum r = *this;
  for (const auto& [k, t] : o.terms_) r.add_canonical(k, t.coeff, t.rep);
  return r;
}

AugSum AugSum::operator-(const AugSum& o) const {
  AugSum r = *this;
  for (const auto& [k, t] : o.terms_) r.add_canonical(k, -t.coeff, t.rep);
  return r;
}

AugSum AugSum::operator*(const Rational& q) const {
  AugSum r;
  if (q == 0) return r;
  for (const auto& [k, t] : terms_) r.add_canonical(k, t.coeff * q, t.rep);
  return r;
}

bool AugSum::operator==(const AugSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second.coeff != jt->second.coeff) return false;
  return true;
}

AugSum AugSum::times_graph(const Graph& g, const CanonicalOptions& opts) const {
  AugSum r;
  for (const auto& [k, t] : terms_)
    r.add_term(t.coeff, AugGraph{concat(t.rep.graph, g), t.rep.simplex_dim}, opts);
  return r;
}

std::string AugSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.str() << ")*[" << k << "]";
  }
  return os.str();
}

FaceResult delta_face(const AugGraph& a, int i) {
  int m = a.simplex_dim;
  if (i < 0 || i > m) throw Error("delta_face: face index out of range");
  SubstRule rule;
  if (i == 0) {
    rule[simplex_name(1)] = SubstTarget::to_zero();
    for (int j = 2; j <= m; ++j)
      rule[simplex_name(j)] = SubstTarget::to(Monomial::symbol(simplex_name(j - 1)));
  } else if (i == m) {
    rule[simplex_name(m)] = SubstTarget::to(Monomial::one());
  } else {
    // identify t_i and t_{i+1}, then renumber downward
    rule[simplex_name(i + 1)] = SubstTarget::to(Monomial::symbol(simplex_name(i)));
    for (int j = i + 2; j <= m; ++j)
      rule[simplex_name(j)] = SubstTarget::to(Monomial::symbol(simplex_name(j - 1)));
  }
  FaceResult out;
  out.value.simplex_dim = m - 1;
  out.value.graph = a.graph;
  for (Edge& e : out.value.graph.edges) {
    ExtLabel l = substitute(e.label, rule);
    if (!l.is_regular()) {
      out.trivial = true;
      return out;
    }
    e.label = l.value;
  }
  return out;
}

AugDelta aug_delta(const AugGraph& a, const CanonicalOptions& opts) {
  AugDelta out;
  if (a.simplex_dim == 0) return out;
  for (int i = 0; i <= a.simplex_dim; ++i) {
    FaceResult f = delta_face(a, i);
    if (f.trivial) {
      ++out.dropped_trivial;
      continue;
    }
    out.sum.add_term((i % 2 == 0) ? 1 : -1, f.value, opts);
  }
  return out;
}

AugDelta aug_delta(const AugSum& s, const CanonicalOptions& opts) {
  AugDelta out;
  for (const auto& [k, t] : s.terms()) {
    AugDelta one = aug_delta(t.rep, opts);
    out.dropped_trivial += one.dropped_trivial;
    out.sum = out.sum + one.sum * t.coeff;
  }
  return out;
}

AugSum aug_partial(const AugGraph& a, const CanonicalOptions& opts) {
  AugSum out;
  for (int e = 0; e < a.graph.num_edges(); ++e) {
    auto contracted = contract_edge(a.graph, e);
    if (!contracted) continue;
    Rational sign = (e % 2 == 0) ? 1 : -1;
    out.add_term(sign, AugGraph{*contracted, a.simplex_dim}, opts);
  }
  return out;
}

AugSum aug_partial(const AugSum& s, const CanonicalOptions& opts) {
  AugSum out;
  for (const auto& [k, t] : s.terms()) out = out + aug_partial(t.rep, opts) * t.coeff;
  return out;
}

namespace {

/// Substitution chains reaching every face of every dimension: compositions
/// of single faces.  Desk-scale m keeps this small.
void face_chains(const AugGraph& a, std::vector<AugGraph>& out) {
  out.push_back(a);
  if (a.simplex_dim == 0) return;
  for (int i = 0; i <= a.simplex_dim; ++i) {
    FaceResult f = delta_face(a, i);
    if (!f.trivial) face_chains(f.value, out);
  }
}

}  // namespace

AugValidationReport aug_validate(const AugGraph& a, long cycle_budget) {
  AugValidationReport rep;
  // Condition 1: no loop coefficient identically 1 on the simplex or on any
  // face of it.  Monomial labels are 1 on a positive-measure set iff they are
  // 1 identically.
  std::vector<AugGraph> charts;
  face_chains(a, charts);
  for (const AugGraph& chart : charts) {
    for (const Loop& loop : enumerate_simple_cycles(chart.graph, cycle_budget)) {
      if (loop_coefficient(chart.graph, loop).is_one()) {
        rep.valid = false;
        rep.violations.push_back("unit loop coefficient on a face chart (dim " +
                                 std::to_string(chart.simplex_dim) + ")");
      }
    }
  }
  // Condition 2: wherever a label vanishes, another label must blow up.  For
  // monomial labels zeros and poles appear only on face chains; check each.
  std::function<void(const AugGraph&)> check_zero_pairing = [&](const AugGraph& g) {
    if (g.simplex_dim == 0) return;
    for (int i = 0; i <= g.simplex_dim; ++i) {
      FaceResult f = delta_face(g, i);
      if (f.trivial) {
        // recompute which degenerations occurred
        bool has_zero = false, has_inf = false;
        SubstRule rule;
        int m = g.simplex_dim;
        if (i == 0) {
          rule[simplex_name(1)] = SubstTarget::to_zero();
          for (int j = 2; j <= m; ++j)
            rule[simplex_name(j)] = SubstTarget::to(Monomial::symbol(simplex_name(j - 1)));
        } else if (i == m) {
          rule[simplex_name(m)] = SubstTarget::to(Monomial::one());
        } else {
          rule[simplex_name(i + 1)] = SubstTarget::to(Monomial::symbol(simplex_name(i)));
          for (int j = i + 2; j <= m; ++j)
            rule[simplex_name(j)] = SubstTarget::to(Monomial::symbol(simplex_name(j - 1)));
        }
        for (const Edge& e : g.graph.edges) {
          ExtLabel l = substitute(e.label, rule);
          if (l.kind == ExtLabel::Kind::Zero) has_zero = true;
          if (l.kind == ExtLabel::Kind::Infinity) has_inf = true;
        }
        if (has_zero && !has_inf) {
          rep.valid = false;
          rep.violations.push_back("zero label without a compensating pole on face " +
                                   std::to_string(i));
        }
      } else {
        check_zero_pairing(f.value);
      }
    }
  };
  check_zero_pairing(a);
  // Condition 3: some face of the top simplex has no pole at all.
  if (a.simplex_dim > 0) {
    bool some_pole_free = false;
    for (int i = 0; i <= a.simplex_dim; ++i) {
      FaceResult f = delta_face(a, i);
      if (f.trivial) continue;
      some_pole_free = true;  // survived: all labels regular
    }
    // A face where labels degenerate *to zero with a pole elsewhere* is the
    // trivial case; pole-free means the face survived substitution.
    if (!some_pole_free) {
      rep.valid = false;
      rep.violations.push_back("every face of the augmentation has a degenerate label");
    }
  }
  return rep;
}

}  // namespace motg
