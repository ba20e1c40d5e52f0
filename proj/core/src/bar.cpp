#include "motgraph/bar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace motg {

namespace {
const std::string kEmptyKey = "V0";
}

const Graph& BarElement::rep(const std::string& key) const {
  auto it = reps_.find(key);
  if (it == reps_.end()) throw Error("BarElement: unknown factor key " + key);
  return it->second;
}

int BarElement::deg_b(const std::string& key) const {
  auto it = degb_.find(key);
  if (it == degb_.end()) throw Error("BarElement: unknown factor key " + key);
  return it->second;
}

void BarElement::register_rep(const std::string& key, const Graph& rep) {
  if (reps_.count(key)) return;
  reps_[key] = rep;
  degb_[key] = degree(rep) - 1;
}

void BarElement::add_word(const BarWord& word, const Rational& c) {
  if (c == 0) return;
  for (const auto& k : word) {
    if (k == kEmptyKey) return;  // degenerate tensor
    if (!reps_.count(k)) throw Error("BarElement: add_word with unregistered key");
  }
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(word, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BarElement::add_graphs(const std::vector<Graph>& word_graphs, const Rational& c,
                            const CanonicalOptions& opts) {
  Rational coeff = c;
  BarWord word;
  for (const Graph& g : word_graphs) {
    CanonicalTerm t = canonical_form(1, g, opts);
    if (t.zero) return;
    coeff *= t.coeff;
    register_rep(t.key, t.representative);
    word.push_back(t.key);
  }
  add_word(word, coeff);
}

BarElement BarElement::operator+(const BarElement& o) const {
  BarElement r = *this;
  for (const auto& [k, g] : o.reps_) r.register_rep(k, g);
  for (const auto& [w, c] : o.terms_) r.add_word(w, c);
  return r;
}

BarElement BarElement::operator-(const BarElement& o) const {
  BarElement r = *this;
  for (const auto& [k, g] : o.reps_) r.register_rep(k, g);
  for (const auto& [w, c] : o.terms_) r.add_word(w, -c);
  return r;
}

BarElement BarElement::operator*(const Rational& q) const {
  BarElement r;
  if (q == 0) return r;
  r.reps_ = reps_;
  r.degb_ = degb_;
  for (const auto& [w, c] : terms_) r.terms_[w] = c * q;
  return r;
}

bool BarElement::operator==(const BarElement& o) const { return terms_ == o.terms_; }

BarElement BarElement::from_sum(const GraphSum& s) {
  BarElement r;
  for (const auto& [key, term] : s.terms()) {
    r.register_rep(key, term.rep);
    r.add_word({key}, term.coeff);
  }
  return r;
}

std::string BarElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) os << " | ";
      os << w[i];
    }
    os << "]";
  }
  return os.str();
}

BarElement bar_partial(const BarElement& x, const CanonicalOptions& opts) {
  BarElement out;
  for (const auto& [k, g] : x.reps_) out.register_rep(k, g);
  // cache of factor differentials
  std::map<std::string, GraphSum> dcache;
  for (const auto& [word, c] : x.terms()) {
    int prefix = 0;
    for (size_t j = 0; j < word.size(); ++j) {
      auto it = dcache.find(word[j]);
      if (it == dcache.end())
        it = dcache.emplace(word[j], differential(x.rep(word[j]), opts)).first;
      Rational sign = (prefix % 2 == 0) ? 1 : -1;
      for (const auto& [dkey, dterm] : it->second.terms()) {
        out.register_rep(dkey, dterm.rep);
        BarWord nw = word;
        nw[j] = dkey;
        out.add_word(nw, c * sign * dterm.coeff);
      }
      prefix += x.deg_b(word[j]);
    }
  }
  return out;
}

BarElement bar_mu(const BarElement& x, const CanonicalOptions& opts) {
  BarElement out;
  for (const auto& [k, g] : x.reps_) out.register_rep(k, g);
  for (const auto& [word, c] : x.terms()) {
    int prefix = 0;
    for (size_t j = 0; j + 1 < word.size(); ++j) {
      prefix += x.deg_b(word[j]);
      Rational sign = (1 + prefix) % 2 == 0 ? 1 : -1;
      CanonicalTerm merged =
          canonical_form(1, concat(x.rep(word[j]), x.rep(word[j + 1])), opts);
      if (merged.zero) continue;
      out.register_rep(merged.key, merged.representative);
      BarWord nw;
      nw.reserve(word.size() - 1);
      for (size_t i = 0; i < word.size(); ++i) {
        if (i == j) {
          nw.push_back(merged.key);
          ++i;  // skip j+1
        } else {
          nw.push_back(word[i]);
        }
      }
      out.add_word(nw, c * sign * merged.coeff);
    }
  }
  return out;
}

ComponentSplit split_components(const Graph& rep, const CanonicalOptions& opts) {
  auto [comp, h0] = components(rep);
  ComponentSplit out;
  out.sign = 1;
  if (h0 <= 1) {
    out.components = {rep};
    return out;
  }
  // order components by their lowest vertex index
  std::vector<int> order(h0);
  {
    std::vector<int> first_vertex(h0, -1);
    for (int v = 0; v < rep.num_vertices; ++v)
      if (first_vertex[comp[v]] < 0) first_vertex[comp[v]] = v;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return first_vertex[a] < first_vertex[b]; });
  }
  std::vector<int> rank(h0);
  for (int i = 0; i < h0; ++i) rank[order[i]] = i;

  out.components.assign(h0, Graph{});
  std::vector<std::map<int, int>> vmaps(h0);
  for (int v = 0; v < rep.num_vertices; ++v) {
    int c = rank[comp[v]];
    vmaps[c][v] = out.components[c].num_vertices++;
  }
  for (const Edge& e : rep.edges) {
    int c = rank[comp[e.src]];
    Edge ne = e;
    ne.src = vmaps[c][e.src];
    ne.dst = vmaps[c][e.dst];
    out.components[c].edges.push_back(std::move(ne));
  }
  // sign relating concat(components) to the original class
  Graph cat = out.components[0];
  for (int c = 1; c < h0; ++c) cat = concat(cat, out.components[c]);
  CanonicalTerm a = canonical_form(1, cat, opts);
  CanonicalTerm b = canonical_form(1, rep, opts);
  if (a.zero || b.zero || a.key != b.key)
    throw Error("split_components: component reassembly mismatch");
  out.sign = a.coeff / b.coeff;
  return out;
}

namespace {

/// Dense exact solver: returns any solution of A x = b, or nullopt.
std::optional<std::vector<Rational>> solve_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t cc = c; cc < cols; ++cc) a[r][cc] *= inv;
    b[r] *= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || a[rr][c] == 0) continue;
      Rational f = a[rr][c];
      for (size_t cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
      b[rr] -= f * b[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t rr = r; rr < rows; ++rr)
    if (b[rr] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace

DecomposabilityResult check_completely_decomposable(const GraphSum& eps, int max_depth,
                                                    const CanonicalOptions& opts) {
  DecomposabilityResult res;
  BarElement layer = BarElement::from_sum(eps);
  res.layers.push_back(layer);
  for (int depth = 1; depth <= max_depth; ++depth) {
    res.depth_reached = depth;
    BarElement boundary = bar_partial(layer, opts);
    if (boundary.empty()) {
      res.decomposable = true;
      return res;
    }
    // Every surviving word must contain a disconnected factor to split.
    BarElement next;
    bool failed = false;
    for (const auto& [word, c] : boundary.terms()) {
      int split_at = -1;
      for (size_t j = 0; j < word.size(); ++j)
        if (betti0(boundary.rep(word[j])) > 1) {
          split_at = static_cast<int>(j);
          break;
        }
      if (split_at < 0) {
        failed = true;
        for (const auto& k : word)
          res.failing_connected.add_canonical(k, c, boundary.rep(k));
        continue;  // keep collecting failures at this stage
      }
      if (failed) continue;
      ComponentSplit split = split_components(boundary.rep(word[split_at]), opts);
      int m = static_cast<int>(split.components.size());
      // Koszul prefix up to the split slot; each merge step reassembling the
      // block contributes (-1)^(1 + prefix + deg_B(partial block)).
      int prefix = 0;
      for (int i = 0; i < split_at; ++i) prefix += boundary.deg_b(word[i]);
      Rational chain_sign = 1;
      int degsum = 0;
      for (int t = 0; t < m - 1; ++t) {
        degsum += degree(split.components[t]);
        chain_sign *= ((prefix + degsum) % 2 == 0) ? 1 : -1;
      }
      Rational coeff = -c * split.sign * chain_sign;
      std::vector<Graph> graphs;
      for (size_t j = 0; j < word.size(); ++j) {
        if (static_cast<int>(j) == split_at) {
          for (const Graph& comp : split.components) graphs.push_back(comp);
        } else {
          graphs.push_back(boundary.rep(word[j]));
        }
      }
      next.add_graphs(graphs, coeff, opts);
    }
    if (failed) {
      res.decomposable = false;
      return res;
    }
    if (next.empty()) {
      res.decomposable = true;
      return res;
    }
    res.layers.push_back(next);
    layer = next;
  }
  throw DepthExceeded("check_completely_decomposable: DepthExceeded");
}

BarElement lift_to_bar_closure(const GraphSum& eps, int max_depth,
                               const CanonicalOptions& opts) {
  BarElement total = BarElement::from_sum(eps);
  BarElement layer = total;
  for (int depth = 1; depth <= max_depth; ++depth) {
    BarElement target = bar_partial(layer, opts) * Rational(-1);
    if (target.empty()) return total;

    // Candidate words: for each target term, split its disconnected factor
    // into (A, B) sub-products and insert B anywhere to the right of A.
    std::vector<BarWord> candidates;
    std::map<BarWord, int> candidate_index;
    BarElement candidate_store;  // rep registry for candidate factor keys
    auto register_graph = [&](const Graph& g) -> std::pair<std::string, Rational> {
      CanonicalTerm t = canonical_form(1, g, opts);
      if (t.zero) return {"", 0};
      candidate_store.register_rep(t.key, t.representative);
      return {t.key, t.coeff};
    };

    for (const auto& [word, c] : target.terms()) {
      for (size_t j = 0; j < word.size(); ++j) {
        const Graph& rep = target.rep(word[j]);
        if (betti0(rep) <= 1) continue;
        ComponentSplit split = split_components(rep, opts);
        int m = static_cast<int>(split.components.size());
        // 2-partitions (A = one subset in order, B = complement in order)
        for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
          Graph a_part, b_part;
          bool a_first = true, b_first = true;
          for (int t = 0; t < m; ++t) {
            if (mask & (1u << t)) {
              a_part = a_first ? split.components[t] : concat(a_part, split.components[t]);
              a_first = false;
            } else {
              b_part = b_first ? split.components[t] : concat(b_part, split.components[t]);
              b_first = false;
            }
          }
          auto [akey, ac] = register_graph(a_part);
          auto [bkey, bc] = register_graph(b_part);
          if (akey.empty() || bkey.empty()) continue;
          // base word with slot j removed
          BarWord rest;
          for (size_t i = 0; i < word.size(); ++i)
            if (i != j) rest.push_back(word[i]);
          // insert A at the split slot, B at any position at or after it
          for (size_t pa = 0; pa <= rest.size(); ++pa) {
            BarWord with_a = rest;
            with_a.insert(with_a.begin() + pa, akey);
            for (size_t pb = 0; pb <= with_a.size(); ++pb) {
              BarWord w2 = with_a;
              w2.insert(w2.begin() + pb, bkey);
              if (!candidate_index.count(w2)) {
                candidate_index[w2] = static_cast<int>(candidates.size());
                candidates.push_back(w2);
              }
            }
          }
        }
      }
    }
    if (candidates.empty())
      throw LiftObstructed("lift_to_bar_closure: no disconnected factor to split; residue " +
                           target.str());

    // Assemble mu(candidate) columns over the word basis of length k.
    std::map<BarWord, int> row_index;
    auto row_of = [&](const BarWord& w) {
      auto it = row_index.find(w);
      if (it != row_index.end()) return it->second;
      int r = static_cast<int>(row_index.size());
      row_index.emplace(w, r);
      return r;
    };
    std::vector<std::map<int, Rational>> col_entries(candidates.size());
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
      BarElement unit;
      for (const auto& k : candidates[ci]) unit.register_rep(k, candidate_store.rep(k));
      unit.add_word(candidates[ci], 1);
      BarElement image = bar_mu(unit, opts);
      for (const auto& [w, c] : image.terms()) col_entries[ci][row_of(w)] = c;
    }
    for (const auto& [w, c] : target.terms()) row_of(w);

    size_t rows = row_index.size(), cols = candidates.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
    std::vector<Rational> b(rows, 0);
    for (size_t ci = 0; ci < cols; ++ci)
      for (const auto& [r, v] : col_entries[ci]) a[r][ci] = v;
    for (const auto& [w, c] : target.terms()) b[row_index[w]] = c;

    auto x = solve_exact(std::move(a), std::move(b));
    if (!x)
      throw LiftObstructed("lift_to_bar_closure: no mu-preimage at depth " +
                           std::to_string(depth) + "; residue " + target.str());

    BarElement next;
    for (size_t ci = 0; ci < cols; ++ci) {
      if ((*x)[ci] == 0) continue;
      for (const auto& k : candidates[ci]) next.register_rep(k, candidate_store.rep(k));
      next.add_word(candidates[ci], (*x)[ci]);
    }
    total = total + next;
    layer = next;
    if (layer.empty()) return total;
  }
  throw DepthExceeded("lift_to_bar_closure: DepthExceeded");
}

WitnessResult coboundary_witness_search(const GraphSum& eps,
                                        const std::vector<GraphSum>& candidates,
                                        const CanonicalOptions& opts) {
  WitnessResult res;
  GraphSum target = eps.connected_part();
  std::map<std::string, int> row_index;
  auto row_of = [&](const std::string& k) {
    auto it = row_index.find(k);
    if (it != row_index.end()) return it->second;
    int r = static_cast<int>(row_index.size());
    row_index.emplace(k, r);
    return r;
  };
  std::vector<GraphSum> images;
  for (const GraphSum& cand : candidates) {
    GraphSum img = differential(cand, opts).connected_part();
    for (const auto& [k, t] : img.terms()) row_of(k);
    images.push_back(std::move(img));
  }
  for (const auto& [k, t] : target.terms()) row_of(k);

  size_t rows = row_index.size(), cols = candidates.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(rows, 0);
  for (size_t c = 0; c < cols; ++c)
    for (const auto& [k, t] : images[c].terms()) a[row_index[k]][c] = t.coeff;
  for (const auto& [k, t] : target.terms()) b[row_index[k]] = t.coeff;

  auto x = solve_exact(std::move(a), std::move(b));
  if (!x) return res;
  res.found = true;
  res.coefficients = *x;
  return res;
}

}  // namespace motg
