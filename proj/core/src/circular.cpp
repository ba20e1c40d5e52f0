#include "motgraph/circular.hpp"

#include <algorithm>
#include <sstream>

namespace motg {

namespace {

const std::string kEmptyTail = "V0";

int slot0_degb(const AugGraph& a) { return a.twisted_degree() - 1; }

Monomial coord(int j) { return Monomial::symbol(simplex_name(j)); }

}  // namespace

const AugGraph& CircularElement::aug_rep(const std::string& key) const {
  auto it = aug_reps_.find(key);
  if (it == aug_reps_.end()) throw Error("CircularElement: unknown slot key " + key);
  return it->second;
}

const Graph& CircularElement::tail_rep(const std::string& key) const {
  auto it = tail_reps_.find(key);
  if (it == tail_reps_.end()) throw Error("CircularElement: unknown tail key " + key);
  return it->second;
}

void CircularElement::add_word(const Rational& c, const AugGraph& slot0,
                               const std::vector<Graph>& tail,
                               const CanonicalOptions& opts) {
  if (c == 0) return;
  CanonicalAugTerm s = canonical_aug(1, slot0, opts);
  if (s.zero) return;
  Rational coeff = c * s.coeff;
  Word w;
  w.slot0 = s.key;
  for (const Graph& g : tail) {
    CanonicalTerm t = canonical_form(1, g, opts);
    if (t.zero) return;
    if (t.key == kEmptyTail) return;  // degenerate tensor factor
    coeff *= t.coeff;
    tail_reps_.emplace(t.key, t.representative);
    tail_degb_.emplace(t.key, degree(t.representative) - 1);
    w.tail.push_back(t.key);
  }
  aug_reps_.emplace(w.slot0, s.representative);
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void CircularElement::add_canonical(const Rational& c, const std::string& slot0_key,
                                    const BarWord& tail) {
  if (c == 0) return;
  for (const auto& k : tail)
    if (k == kEmptyTail) return;
  Word w{slot0_key, tail};
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CircularElement CircularElement::operator+(const CircularElement& o) const {
  CircularElement r = *this;
  for (const auto& [k, g] : o.aug_reps_) r.aug_reps_.emplace(k, g);
  for (const auto& [k, g] : o.tail_reps_) r.tail_reps_.emplace(k, g);
  for (const auto& [k, d] : o.tail_degb_) r.tail_degb_.emplace(k, d);
  for (const auto& [w, c] : o.terms_) r.add_canonical(c, w.slot0, w.tail);
  return r;
}

CircularElement CircularElement::operator*(const Rational& q) const {
  CircularElement r;
  if (q == 0) return r;
  r.aug_reps_ = aug_reps_;
  r.tail_reps_ = tail_reps_;
  r.tail_degb_ = tail_degb_;
  for (const auto& [w, c] : terms_) r.terms_[w] = c * q;
  return r;
}

std::string CircularElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << w.slot0;
    for (const auto& k : w.tail) os << " | " << k;
    os << "]";
  }
  return os.str();
}

CircularElement CircularElement::partial(const CanonicalOptions& opts) const {
  CircularElement out;
  for (const auto& [word, c] : terms_) {
    const AugGraph& a = aug_rep(word.slot0);
    // algebraic boundary of the augmented slot (position 0, no prefix sign)
    AugSum da = aug_partial(a, opts);
    for (const auto& [k, t] : da.terms()) {
      out.aug_reps_.emplace(k, t.rep);
      out.add_canonical(c * t.coeff, k, word.tail);
    }
    // boundary of the tail factors, Koszul prefix starts at the slot degree
    int prefix = slot0_degb(a);
    for (size_t j = 0; j < word.tail.size(); ++j) {
      GraphSum d = differential(tail_rep(word.tail[j]), opts);
      Rational sign = (((prefix % 2) + 2) % 2 == 0) ? 1 : -1;
      for (const auto& [dk, dt] : d.terms()) {
        out.tail_reps_.emplace(dk, dt.rep);
        out.tail_degb_.emplace(dk, degree(dt.rep) - 1);
        BarWord nt = word.tail;
        nt[j] = dk;
        out.aug_reps_.emplace(word.slot0, a);
        out.add_canonical(c * sign * dt.coeff, word.slot0, nt);
      }
      prefix += tail_degb_.at(word.tail[j]);
    }
  }
  return out;
}

CircularElement CircularElement::delta(const CanonicalOptions& opts) const {
  CircularElement out;
  for (const auto& [word, c] : terms_) {
    const AugGraph& a = aug_rep(word.slot0);
    AugDelta d = aug_delta(a, opts);
    for (const auto& [k, t] : d.sum.terms()) {
      out.aug_reps_.emplace(k, t.rep);
      out.add_canonical(c * t.coeff, k, word.tail);
    }
  }
  return out;
}

CircularElement CircularElement::mu(const CanonicalOptions& opts) const {
  CircularElement out;
  for (const auto& [word, c] : terms_) {
    const AugGraph& a = aug_rep(word.slot0);
    int d0 = slot0_degb(a);
    if (!word.tail.empty()) {
      // absorb the first tail factor into the augmented slot
      Rational sign = (((1 + d0) % 2 + 2) % 2 == 0) ? 1 : -1;
      AugGraph merged{concat(a.graph, tail_rep(word.tail[0])), a.simplex_dim};
      CanonicalAugTerm mt = canonical_aug(1, merged, opts);
      if (!mt.zero) {
        out.aug_reps_.emplace(mt.key, mt.representative);
        BarWord nt(word.tail.begin() + 1, word.tail.end());
        out.add_canonical(c * sign * mt.coeff, mt.key, nt);
      }
    }
    int prefix = d0;
    for (size_t j = 0; j + 1 < word.tail.size(); ++j) {
      prefix += tail_degb_.at(word.tail[j]);
      Rational sign = (((1 + prefix) % 2 + 2) % 2 == 0) ? 1 : -1;
      CanonicalTerm merged = canonical_form(
          1, concat(tail_rep(word.tail[j]), tail_rep(word.tail[j + 1])), opts);
      if (merged.zero) continue;
      out.tail_reps_.emplace(merged.key, merged.representative);
      out.tail_degb_.emplace(merged.key, degree(merged.representative) - 1);
      BarWord nt;
      for (size_t i = 0; i < word.tail.size(); ++i) {
        if (i == j) {
          nt.push_back(merged.key);
          ++i;
        } else {
          nt.push_back(word.tail[i]);
        }
      }
      out.aug_reps_.emplace(word.slot0, a);
      out.add_canonical(c * sign * merged.coeff, word.slot0, nt);
    }
  }
  return out;
}

CircularElement CircularElement::total_differential(const CanonicalOptions& opts) const {
  return partial(opts) + delta(opts) + mu(opts);
}

CircularElement embed_bar(const BarElement& e, const CanonicalOptions& opts) {
  CircularElement out;
  AugGraph unit{Graph{}, 0};
  for (const auto& [word, c] : e.terms()) {
    std::vector<Graph> tail;
    for (const auto& k : word) tail.push_back(e.rep(k));
    out.add_word(c, unit, tail, opts);
  }
  return out;
}

namespace {

/// sigma-augmented xi^n_m with head-label base b: the last head bead carries
/// the u2/u1 twist (merged into the head itself when no bead remains), and
/// the split-off loop chain telescopes u2, ..., u_{m+1}.
AugSum sigma_xi(const Monomial& b, const std::vector<Monomial>& beads, int m,
                const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  int k = n - m;
  if (k < 0) throw Error("sigma_xi: m exceeds bead count");
  Graph left, right;
  if (k >= 1) {
    std::vector<Monomial> head_beads(beads.begin(), beads.begin() + k);
    head_beads[k - 1] = head_beads[k - 1] * coord(2) * coord(1).inverse();
    Monomial top = b * coord(2).inverse();
    left = make_necklace(NecklaceKind::Left, top, head_beads);
    right = make_necklace(NecklaceKind::Right, top.inverse(), head_beads);
  } else {
    Monomial top = b * coord(1).inverse();
    left = make_loop_graph(top);
    right = make_loop_graph(top.inverse());
  }
  for (int i = k + 1; i <= n; ++i) {
    int p = i - k + 1;  // coordinate index of this loop's lower variable
    Monomial upper = (p + 1 <= m + 1) ? coord(p + 1) : Monomial::one();
    Monomial label = beads[i - 1] * upper * coord(p).inverse();
    left = concat(left, make_loop_graph(label));
    right = concat(right, make_loop_graph(label));
  }
  AugSum out;
  out.add_term(1, AugGraph{left, m + 1}, opts);
  out.add_term(-1, AugGraph{right, m + 1}, opts);
  return out;
}

/// rho-augmented xi^n_m: no head twist; the first split-off loop reaches
/// down to u1 instead of u2.
AugSum rho_xi(const Monomial& b, const std::vector<Monomial>& beads, int m,
              const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  int k = n - m;
  if (m < 1 || k < 0) throw Error("rho_xi: invalid m");
  Graph left, right;
  Monomial top = b * coord(2).inverse();
  if (k >= 1) {
    std::vector<Monomial> head_beads(beads.begin(), beads.begin() + k);
    left = make_necklace(NecklaceKind::Left, top, head_beads);
    right = make_necklace(NecklaceKind::Right, top.inverse(), head_beads);
  } else {
    left = make_loop_graph(top);
    right = make_loop_graph(top.inverse());
  }
  for (int i = k + 1; i <= n; ++i) {
    int p = i - k + 1;
    Monomial upper = (p + 1 <= m + 1) ? coord(p + 1) : Monomial::one();
    Monomial lower = (i == k + 1) ? coord(1) : coord(p);
    Monomial label = beads[i - 1] * upper * lower.inverse();
    left = concat(left, make_loop_graph(label));
    right = concat(right, make_loop_graph(label));
  }
  AugSum out;
  out.add_term(1, AugGraph{left, m + 1}, opts);
  out.add_term(-1, AugGraph{right, m + 1}, opts);
  return out;
}

AugSum lambda_sum(const Monomial& a0, const std::vector<Monomial>& beads, int m,
                  const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  int k = n - m;
  std::vector<int> range;  // J runs over beads k+1..n
  for (int i = k + 1; i <= n; ++i) range.push_back(i);
  AugSum out;
  for (unsigned mask = 0; mask < (1u << range.size()); ++mask) {
    Monomial b = a0;
    int bits = 0;
    for (size_t t = 0; t < range.size(); ++t)
      if (mask & (1u << t)) {
        b = b * beads[range[t] - 1];
        ++bits;
      }
    Rational sign = (bits % 2 == 0) ? 1 : -1;
    out = out + sigma_xi(b, beads, m, opts) * sign;
  }
  return out;
}

AugSum chi_sum(const Monomial& a0, const std::vector<Monomial>& beads, int m,
               const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  int k = n - m;
  std::vector<int> range;  // I runs over beads k+2..n
  for (int i = k + 2; i <= n; ++i) range.push_back(i);
  AugSum out;
  for (unsigned mask = 0; mask < (1u << range.size()); ++mask) {
    Monomial b = a0;
    int bits = 0;
    for (size_t t = 0; t < range.size(); ++t)
      if (mask & (1u << t)) {
        b = b * beads[range[t] - 1];
        ++bits;
      }
    Rational sign = (bits % 2 == 0) ? 1 : -1;
    out = out + rho_xi(b, beads, m, opts) * sign;
  }
  return out;
}

}  // namespace

XiFamily make_xi_family(const Monomial& a0, const std::vector<Monomial>& beads,
                        const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  XiFamily fam;
  fam.lambda.resize(n + 1);
  fam.chi.resize(n + 1);
  for (int m = 0; m <= n; ++m) {
    fam.lambda[m] = lambda_sum(a0, beads, m, opts);
    fam.xi_top = fam.xi_top + fam.lambda[m];
  }
  for (int m = 1; m <= n; ++m) {
    fam.chi[m] = chi_sum(a0, beads, m, opts);
    fam.xi_top = fam.xi_top - fam.chi[m];
  }
  return fam;
}

CircularElement make_bold_xi(const Monomial& a0, const std::vector<Monomial>& beads,
                             const CanonicalOptions& opts) {
  int n = static_cast<int>(beads.size());
  CircularElement out;
  for (unsigned s_mask = 0; s_mask < (1u << n); ++s_mask) {
    std::vector<int> s_set;
    std::vector<Monomial> kept;
    for (int i = 0; i < n; ++i) {
      if (s_mask & (1u << i))
        s_set.push_back(i);
      else
        kept.push_back(beads[i]);
    }
    Rational sign = (s_set.size() % 2 == 0) ? 1 : -1;
    XiFamily fam = make_xi_family(a0, kept, opts);
    std::vector<int> order = s_set;
    do {
      std::vector<Graph> tail;
      for (int i : order) tail.push_back(make_loop_graph(beads[i]));
      for (const auto& [k, t] : fam.xi_top.terms())
        out.add_word(sign * t.coeff, t.rep, tail, opts);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

namespace {

/// Bare face image of a sum (substitution only, trivial terms dropped).
AugSum face_of(const AugSum& s, int i, const CanonicalOptions& opts) {
  AugSum out;
  for (const auto& [k, t] : s.terms()) {
    FaceResult f = delta_face(t.rep, i);
    if (f.trivial) continue;
    out.add_term(t.coeff, f.value, opts);
  }
  return out;
}

}  // namespace

ClosureReport verify_circular_closure(int n, const CanonicalOptions& opts) {
  ClosureReport rep;
  Monomial a0 = Monomial::symbol("a0");
  std::vector<Monomial> beads;
  for (int i = 1; i <= n; ++i) beads.push_back(Monomial::symbol("a" + std::to_string(i)));

  auto beads_without = [&](int i1) {  // 1-based bead index removed
    std::vector<Monomial> out;
    for (int i = 1; i <= n; ++i)
      if (i != i1) out.push_back(beads[i - 1]);
    return out;
  };

  // -- master closure --------------------------------------------------
  CircularElement element = make_bold_xi(a0, beads, opts) +
                            embed_bar(make_bold_eps(a0, beads, opts), opts);
  CircularElement dd = element.total_differential(opts);
  rep.closed = dd.empty();
  if (!rep.closed) rep.residue = dd.str();

  // -- layer identities --------------------------------------------------
  XiFamily fam = make_xi_family(a0, beads, opts);

  // boundary of lambda layers:
  //   d lambda^n_m = -mu(sum_i (lambda^{n-1}_m(a0, a\i) -
  //                             lambda^{n-1}_m(a0 a_i, a\i)) (x) G0(a_i))
  //                  + face_2 chi^n_{m+1}(a0) - face_1 chi^n_{m+1}(a0 a_{n-m})
  rep.identity_alg1 = true;
  for (int m = 0; m + 1 <= n; ++m) {
    AugSum lhs = aug_partial(fam.lambda[m], opts);
    AugSum rhs;
    for (int i = 1; i <= n - m - 1; ++i) {
      XiFamily sub0 = make_xi_family(a0, beads_without(i), opts);
      XiFamily subi = make_xi_family(a0 * beads[i - 1], beads_without(i), opts);
      AugSum diff = sub0.lambda[m] - subi.lambda[m];
      rhs = rhs - diff.times_graph(make_loop_graph(beads[i - 1]), opts);
    }
    AugSum chi_next = chi_sum(a0, beads, m + 1, opts);
    AugSum chi_next_shift = chi_sum(a0 * beads[n - m - 1], beads, m + 1, opts);
    rhs = rhs + face_of(chi_next, 2, opts) - face_of(chi_next_shift, 1, opts);
    if (!(lhs == rhs)) rep.identity_alg1 = false;
  }

  // boundary of chi layers:
  //   -d chi^n_m = mu(sum_i (chi^{n-1}_m(a0, a\i) -
  //                          chi^{n-1}_m(a0 a_i, a\i)) (x) G0(a_i))
  rep.identity_alg2 = true;
  for (int m = 1; m <= n; ++m) {
    AugSum lhs = aug_partial(fam.chi[m], opts) * Rational(-1);
    AugSum rhs;
    for (int i = 1; i <= n - m; ++i) {
      AugSum c0 = chi_sum(a0, beads_without(i), m, opts);
      AugSum ci = chi_sum(a0 * beads[i - 1], beads_without(i), m, opts);
      rhs = rhs + (c0 - ci).times_graph(make_loop_graph(beads[i - 1]), opts);
    }
    if (!(lhs == rhs)) rep.identity_alg2 = false;
  }

  // faces of lambda layers (m >= 1):
  //   delta lambda^n_m = -face_1 chi^n_m(a0) + face_1 chi^n_m(a0 a_{n-m+1})
  //                      - mu(sum_{i>n-m} lambda^{n-1}_{m-1}(a0, a\i) (x) G0(a_i))
  rep.identity_topo1 = true;
  for (int m = 1; m <= n; ++m) {
    AugSum lhs = aug_delta(fam.lambda[m], opts).sum;
    AugSum rhs;
    AugSum chi_m = chi_sum(a0, beads, m, opts);
    AugSum chi_m_shift = chi_sum(a0 * beads[n - m], beads, m, opts);
    rhs = rhs - face_of(chi_m, 1, opts) + face_of(chi_m_shift, 1, opts);
    for (int i = n - m + 1; i <= n; ++i) {
      XiFamily sub = make_xi_family(a0, beads_without(i), opts);
      rhs = rhs - sub.lambda[m - 1].times_graph(make_loop_graph(beads[i - 1]), opts);
    }
    if (!(lhs == rhs)) rep.identity_topo1 = false;
  }

  // faces of chi layers:
  //   -delta chi^n_m = face_1 chi^n_m(a0) - face_2 chi^n_{m+1}(a0)
  //                    + mu(sum_{i>n-m} chi^{n-1}_{m-1}(a0, a\i) (x) G0(a_i))
  rep.identity_topo2 = true;
  for (int m = 1; m <= n; ++m) {
    AugSum lhs = aug_delta(fam.chi[m], opts).sum * Rational(-1);
    AugSum rhs = face_of(fam.chi[m], 1, opts);
    if (m + 1 <= n) rhs = rhs - face_of(chi_sum(a0, beads, m + 1, opts), 2, opts);
    for (int i = n - m + 1; i <= n; ++i) {
      if (m - 1 >= 1) {
        AugSum sub = chi_sum(a0, beads_without(i), m - 1, opts);
        rhs = rhs + sub.times_graph(make_loop_graph(beads[i - 1]), opts);
      }
    }
    if (!(lhs == rhs)) rep.identity_topo2 = false;
  }

  return rep;
}

}  // namespace motg
