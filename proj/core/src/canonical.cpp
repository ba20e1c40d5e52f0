#include "motgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace motg {

Graph vertex_rescale(const Graph& g, int v, const Monomial& alpha) {
  Graph out = g;
  for (Edge& e : out.edges) {
    if (e.is_self_loop()) continue;
    if (e.dst == v) e.label = e.label * alpha;
    if (e.src == v) e.label = e.label * alpha.inverse();
  }
  return out;
}

namespace {

/// Labels after the gauge that makes every given tree edge carry label 1.
/// parent_edge/parent_vertex describe a rooted spanning forest; bfs_order
/// visits parents before children.
std::vector<Monomial> gauge_labels(const Graph& g,
                                   const std::vector<int>& parent_edge,
                                   const std::vector<int>& parent_vertex,
                                   const std::vector<int>& bfs_order) {
  std::vector<Monomial> alpha(g.num_vertices, Monomial::one());
  for (int v : bfs_order) {
    int ei = parent_edge[v];
    if (ei < 0) continue;
    const Edge& e = g.edges[ei];
    const Monomial& ap = alpha[parent_vertex[v]];
    // label' = label * alpha_dst / alpha_src must be 1 on the tree edge
    if (e.dst == v)
      alpha[v] = ap * e.label.inverse();  // e: parent -> v
    else
      alpha[v] = ap * e.label;  // e: v -> parent
  }
  std::vector<Monomial> labels;
  labels.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    if (e.is_self_loop())
      labels.push_back(e.label);
    else
      labels.push_back(e.label * alpha[e.dst] * alpha[e.src].inverse());
  }
  return labels;
}

int permutation_parity(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> visited(n, 0);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    int len = 0, j = i;
    while (!visited[j]) {
      visited[j] = 1;
      j = perm[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// BFS forest structure of a candidate graph; only the choice among parallel
/// edges at each (parent, child) step is free.
struct ForestEnumerator {
  const Graph& g;
  std::vector<int> bfs_order;
  std::vector<int> parent_vertex;
  std::vector<std::vector<int>> step_options;

  explicit ForestEnumerator(const Graph& graph) : g(graph) {
    parent_vertex.assign(g.num_vertices, -1);
    std::vector<std::vector<int>> neighbors(g.num_vertices);
    for (const Edge& e : g.edges) {
      if (e.is_self_loop()) continue;
      neighbors[e.src].push_back(e.dst);
      neighbors[e.dst].push_back(e.src);
    }
    for (auto& nb : neighbors) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    std::vector<char> seen(g.num_vertices, 0);
    for (int root = 0; root < g.num_vertices; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      bfs_order.push_back(root);
      std::vector<int> queue{root};
      size_t qi = 0;
      while (qi < queue.size()) {
        int v = queue[qi++];
        for (int w : neighbors[v]) {
          if (seen[w]) continue;
          seen[w] = 1;
          parent_vertex[w] = v;
          bfs_order.push_back(w);
          queue.push_back(w);
        }
      }
    }
    step_options.assign(g.num_vertices, {});
    for (int i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges[i];
      if (e.is_self_loop()) continue;
      if (parent_vertex[e.dst] == e.src) step_options[e.dst].push_back(i);
      if (parent_vertex[e.src] == e.dst) step_options[e.src].push_back(i);
    }
  }

  template <typename Fn>
  void for_each_forest(Fn&& fn) const {
    std::vector<int> tree_vertices;
    for (int v : bfs_order)
      if (parent_vertex[v] >= 0) tree_vertices.push_back(v);
    std::vector<size_t> choice(tree_vertices.size(), 0);
    std::vector<int> parent_edge(g.num_vertices, -1);
    while (true) {
      for (size_t i = 0; i < tree_vertices.size(); ++i)
        parent_edge[tree_vertices[i]] = step_options[tree_vertices[i]][choice[i]];
      fn(parent_edge);
      size_t k = 0;
      while (k < choice.size() &&
             ++choice[k] == step_options[tree_vertices[k]].size()) {
        choice[k] = 0;
        ++k;
      }
      if (k == choice.size()) break;
    }
  }
};

std::vector<std::vector<int>> invariant_classes(const Graph& g) {
  std::vector<std::array<int, 3>> inv(g.num_vertices, {0, 0, 0});
  for (const Edge& e : g.edges) {
    if (e.is_self_loop()) {
      ++inv[e.src][2];
    } else {
      ++inv[e.src][0];
      ++inv[e.dst][1];
    }
  }
  std::map<std::array<int, 3>, std::vector<int>> by_inv;
  for (int v = 0; v < g.num_vertices; ++v) by_inv[inv[v]].push_back(v);
  std::vector<std::vector<int>> classes;
  for (auto& [k, vs] : by_inv) classes.push_back(vs);
  return classes;
}

}  // namespace

Bigrade bigrade(const Graph& g) { return {betti1(g), degree(g)}; }

Graph gauge_fix(const Graph& g) {
  LoopData ld = loop_data(g);
  std::vector<int> parent_edge(g.num_vertices, -1), parent_vertex(g.num_vertices, -1);
  std::vector<int> order;
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int ei : ld.forest_edges) {
    const Edge& e = g.edges[ei];
    adj[e.src].push_back({e.dst, ei});
    adj[e.dst].push_back({e.src, ei});
  }
  std::vector<char> seen(g.num_vertices, 0);
  for (int root = 0; root < g.num_vertices; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    order.push_back(root);
    std::vector<int> queue{root};
    size_t qi = 0;
    while (qi < queue.size()) {
      int v = queue[qi++];
      for (auto [w, ei] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent_edge[w] = ei;
        parent_vertex[w] = v;
        order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::vector<Monomial> labels = gauge_labels(g, parent_edge, parent_vertex, order);
  Graph out = g;
  for (size_t i = 0; i < labels.size(); ++i) out.edges[i].label = labels[i];
  return out;
}

CanonicalTerm canonical_form(const Rational& coeff, const Graph& g,
                             const CanonicalOptions& opts) {
  CanonicalTerm result;
  if (coeff == 0) {
    result.zero = true;
    return result;
  }
  if (g.num_vertices > opts.vertex_budget)
    throw BudgetExceeded("canonical_form: VertexBudgetExceeded (" +
                         std::to_string(g.num_vertices) + " > " +
                         std::to_string(opts.vertex_budget) + ")");

  Rational q = coeff;
  Graph base = g;
  for (Edge& e : base.edges)
    if (e.sign == -1) {
      e.sign = +1;
      q = -q;
    }

  if (base.empty()) {
    result.key = "V0";
    result.coeff = q;
    result.representative = base;
    return result;
  }

  bool have_best = false;
  std::string best_encoding;
  std::vector<std::pair<std::array<int, 2>, Monomial>> best_edges;
  bool plus_seen = false, minus_seen = false, dead = false;
  long candidates_tried = 0;

  struct Keyed {
    int src, dst;
    std::string label;
    int pos;
  };
  std::vector<Keyed> views;

  for (int orientation = 0; orientation < 2 && !dead; ++orientation) {
    Graph oriented = base;
    if (orientation == 1)
      for (Edge& e : oriented.edges) std::swap(e.src, e.dst);

    auto classes = invariant_classes(oriented);
    std::vector<int> class_start;
    int acc = 0;
    for (const auto& c : classes) {
      class_start.push_back(acc);
      acc += static_cast<int>(c.size());
    }
    std::vector<std::vector<int>> perms = classes;
    auto next_assignment = [&]() {
      for (size_t k = 0; k < perms.size(); ++k)
        if (std::next_permutation(perms[k].begin(), perms[k].end())) return true;
      return false;
    };

    do {
      if (++candidates_tried > opts.candidate_budget)
        throw BudgetExceeded("canonical_form: candidate budget exceeded");
      std::vector<int> new_index(oriented.num_vertices, -1);
      for (size_t k = 0; k < perms.size(); ++k)
        for (size_t j = 0; j < perms[k].size(); ++j)
          new_index[perms[k][j]] = class_start[k] + static_cast<int>(j);

      Graph relabeled = oriented;
      for (Edge& e : relabeled.edges) {
        e.src = new_index[e.src];
        e.dst = new_index[e.dst];
      }

      ForestEnumerator fe(relabeled);
      fe.for_each_forest([&](const std::vector<int>& parent_edge) {
        if (dead) return;
        std::vector<Monomial> labels =
            gauge_labels(relabeled, parent_edge, fe.parent_vertex, fe.bfs_order);
        views.clear();
        for (int i = 0; i < relabeled.num_edges(); ++i)
          views.push_back({relabeled.edges[i].src, relabeled.edges[i].dst,
                           labels[i].str(), i});
        std::sort(views.begin(), views.end(), [](const Keyed& a, const Keyed& b) {
          if (a.src != b.src) return a.src < b.src;
          if (a.dst != b.dst) return a.dst < b.dst;
          return a.label < b.label;
        });
        for (size_t i = 1; i < views.size(); ++i)
          if (views[i - 1].src == views[i].src && views[i - 1].dst == views[i].dst &&
              views[i - 1].label == views[i].label) {
            dead = true;  // two indistinguishable edges: odd automorphism
            return;
          }
        std::ostringstream os;
        os << 'V' << relabeled.num_vertices;
        for (const Keyed& v : views) os << '|' << v.src << ',' << v.dst << ',' << v.label;
        std::string encoding = os.str();
        if (have_best && encoding > best_encoding) return;

        std::vector<int> perm;
        perm.reserve(views.size());
        for (const Keyed& v : views) perm.push_back(v.pos);
        int sign = permutation_parity(perm);

        if (!have_best || encoding < best_encoding) {
          have_best = true;
          best_encoding = encoding;
          plus_seen = sign > 0;
          minus_seen = sign < 0;
          best_edges.clear();
          for (const Keyed& v : views)
            best_edges.push_back({{v.src, v.dst}, labels[v.pos]});
        } else {
          (sign > 0 ? plus_seen : minus_seen) = true;
          if (plus_seen && minus_seen) dead = true;
        }
      });
      if (dead) break;
    } while (next_assignment());
  }

  if (dead || (plus_seen && minus_seen) || !have_best) {
    result.zero = true;
    return result;
  }
  result.key = best_encoding;
  result.coeff = plus_seen ? q : -q;
  result.representative.num_vertices = base.num_vertices;
  for (auto& [sd, label] : best_edges)
    result.representative.edges.push_back({sd[0], sd[1], label, +1});
  return result;
}

std::string key_to_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace motg
