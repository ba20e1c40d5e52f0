#include "motgraph/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace motg {

Monomial loop_coefficient(const Graph& g, const Loop& loop) {
  Monomial chi;
  for (auto [ei, dir] : loop.steps) chi = chi * g.edges[ei].label.pow(dir);
  return chi;
}

namespace {

bool component_strongly_connected(const Graph& g, const std::vector<int>& comp,
                                  int c) {
  int start = -1, size = 0;
  for (int v = 0; v < g.num_vertices; ++v)
    if (comp[v] == c) {
      if (start < 0) start = v;
      ++size;
    }
  if (start < 0) return true;
  std::vector<std::vector<int>> fwd(g.num_vertices), bwd(g.num_vertices);
  for (const Edge& e : g.edges) {
    fwd[e.src].push_back(e.dst);
    bwd[e.dst].push_back(e.src);
  }
  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(g.num_vertices, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int n = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++n;
          stack.push_back(w);
        }
    }
    return n;
  };
  return reach(fwd) == size && reach(bwd) == size;
}

/// Biconnected blocks (edge index lists, each sorted) of the underlying
/// undirected multigraph.  Self-loops form singleton blocks.
std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges[i];
    if (e.is_self_loop()) continue;
    adj[e.src].push_back({e.dst, i});
    adj[e.dst].push_back({e.src, i});
  }
  std::vector<int> depth(g.num_vertices, -1), low(g.num_vertices, 0);
  std::vector<char> edge_used(g.num_edges(), 0);
  std::vector<int> edge_stack;

  auto pop_block = [&](int until_edge) {
    std::vector<int> block;
    while (!edge_stack.empty()) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == until_edge) break;
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  };

  struct Frame {
    int v, parent_edge;
    size_t next = 0;
  };
  for (int root = 0; root < g.num_vertices; ++root) {
    if (depth[root] != -1 || adj[root].empty()) continue;
    std::vector<Frame> stack{{root, -1}};
    depth[root] = 0;
    low[root] = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, ei] = adj[f.v][f.next++];
        if (ei == f.parent_edge || edge_used[ei]) continue;
        edge_used[ei] = 1;
        edge_stack.push_back(ei);
        if (depth[w] == -1) {
          depth[w] = depth[f.v] + 1;
          low[w] = depth[w];
          stack.push_back({w, ei});
        } else {
          low[f.v] = std::min(low[f.v], depth[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (stack.empty()) break;
        Frame& up = stack.back();
        low[up.v] = std::min(low[up.v], low[done.v]);
        if (low[done.v] >= depth[up.v]) pop_block(done.parent_edge);
      }
    }
    if (!edge_stack.empty()) pop_block(edge_stack.front());
  }
  for (int i = 0; i < g.num_edges(); ++i)
    if (g.edges[i].is_self_loop()) blocks.push_back({i});
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return blocks;
}

std::set<int> articulation_from_blocks(const Graph& g,
                                       const std::vector<std::vector<int>>& blocks) {
  // A vertex is an articulation point iff it lies in at least two blocks.
  std::vector<int> block_count(g.num_vertices, 0);
  std::set<int> result;
  for (const auto& block : blocks) {
    std::set<int> verts;
    for (int ei : block) {
      verts.insert(g.edges[ei].src);
      verts.insert(g.edges[ei].dst);
    }
    for (int v : verts)
      if (++block_count[v] >= 2) result.insert(v);
  }
  return result;
}

}  // namespace

StructureReport structure(const Graph& g) {
  StructureReport r;
  auto [comp, h0] = components(g);
  r.component_of_vertex = comp;
  r.h0 = h0;
  r.h1 = g.num_edges() - g.num_vertices + h0;
  r.strongly_connected.resize(h0, true);
  for (int c = 0; c < h0; ++c) {
    r.strongly_connected[c] = component_strongly_connected(g, comp, c);
    if (!r.strongly_connected[c]) r.all_strongly_connected = false;
  }
  auto blocks = biconnected_blocks(g);
  r.articulation_vertices = articulation_from_blocks(g, blocks);
  for (const auto& block : blocks) {
    Graph piece;
    std::map<int, int> vmap;
    auto localize = [&](int v) {
      auto it = vmap.find(v);
      if (it != vmap.end()) return it->second;
      int nv = static_cast<int>(vmap.size());
      vmap[v] = nv;
      return nv;
    };
    for (int ei : block) {
      Edge e = g.edges[ei];
      e.src = localize(e.src);
      e.dst = localize(e.dst);
      piece.edges.push_back(std::move(e));
    }
    piece.num_vertices = static_cast<int>(vmap.size());
    r.biconnected_pieces.push_back(std::move(piece));
  }
  return r;
}

LoopData loop_data(const Graph& g) {
  LoopData out;
  std::vector<int> parent_edge(g.num_vertices, -1);
  std::vector<int> parent_vertex(g.num_vertices, -1);
  std::vector<char> in_tree_vertex(g.num_vertices, 0);
  std::vector<char> in_forest(g.num_edges(), 0);

  // adjacency as (neighbor, edge index); BFS tie-break = (neighbor, position)
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges[i];
    if (e.is_self_loop()) continue;
    adj[e.src].push_back({e.dst, i});
    adj[e.dst].push_back({e.src, i});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  for (int root = 0; root < g.num_vertices; ++root) {
    if (in_tree_vertex[root]) continue;
    in_tree_vertex[root] = 1;
    std::vector<int> frontier{root};
    size_t qi = 0;
    while (qi < frontier.size()) {
      int v = frontier[qi++];
      for (auto [w, ei] : adj[v]) {
        if (in_tree_vertex[w]) continue;
        in_tree_vertex[w] = 1;
        in_forest[ei] = 1;
        parent_edge[w] = ei;
        parent_vertex[w] = v;
        frontier.push_back(w);
      }
    }
  }
  for (int i = 0; i < g.num_edges(); ++i)
    if (in_forest[i]) out.forest_edges.push_back(i);

  // Steps walking from v up to its root: (edge, direction of travel).
  auto path_up = [&](int v) {
    std::vector<std::pair<int, int>> steps;
    while (parent_edge[v] != -1) {
      int ei = parent_edge[v];
      const Edge& e = g.edges[ei];
      steps.push_back({ei, e.src == v ? +1 : -1});
      v = parent_vertex[v];
    }
    return steps;
  };

  for (int i = 0; i < g.num_edges(); ++i) {
    if (in_forest[i]) continue;
    const Edge& e = g.edges[i];
    Loop loop;
    loop.steps.push_back({i, +1});
    if (!e.is_self_loop()) {
      auto up_from_dst = path_up(e.dst);
      auto up_from_src = path_up(e.src);
      while (!up_from_dst.empty() && !up_from_src.empty() &&
             up_from_dst.back().first == up_from_src.back().first) {
        up_from_dst.pop_back();
        up_from_src.pop_back();
      }
      for (auto [ei2, dir] : up_from_dst) loop.steps.push_back({ei2, dir});
      for (auto it = up_from_src.rbegin(); it != up_from_src.rend(); ++it)
        loop.steps.push_back({it->first, -it->second});
    }
    out.fundamental.push_back(loop);
    out.chi.push_back(loop_coefficient(g, loop));
  }
  return out;
}

std::vector<Loop> enumerate_simple_cycles(const Graph& g, long budget) {
  std::vector<Loop> cycles;
  std::set<std::vector<int>> seen;
  long work = 0;

  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges[i];
    if (e.is_self_loop()) continue;
    adj[e.src].push_back({e.dst, i});
    adj[e.dst].push_back({e.src, i});
  }

  for (int i = 0; i < g.num_edges(); ++i)
    if (g.edges[i].is_self_loop()) cycles.push_back(Loop{{{i, +1}}});

  std::vector<char> on_path(g.num_vertices, 0);
  std::vector<std::pair<int, int>> path;

  auto normalize = [](std::vector<int> s) {
    auto mn = std::min_element(s.begin(), s.end());
    std::rotate(s.begin(), mn, s.end());
    return s;
  };

  std::function<void(int, int)> dfs = [&](int start, int v) {
    if (++work > budget)
      throw BudgetExceeded("enumerate_simple_cycles: CycleBudgetExceeded");
    for (auto [w, ei] : adj[v]) {
      if (!path.empty() && path.back().first == ei) continue;  // no U-turn
      if (w == start && !path.empty()) {
        std::vector<std::pair<int, int>> steps = path;
        steps.push_back({ei, g.edges[ei].src == v ? +1 : -1});
        std::vector<int> sig;
        for (auto [e2, d2] : steps) sig.push_back(e2);
        std::vector<int> rev(sig.rbegin(), sig.rend());
        sig = std::min(normalize(sig), normalize(rev));
        if (seen.insert(sig).second) cycles.push_back(Loop{steps});
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back({ei, g.edges[ei].src == v ? +1 : -1});
      dfs(start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 0; s < g.num_vertices; ++s) {
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return cycles;
}

HandleDecomposition handle_decomposition(const Graph& g) {
  HandleDecomposition out;
  std::vector<int> valence(g.num_vertices, 0);
  for (const Edge& e : g.edges) {
    ++valence[e.src];
    ++valence[e.dst];
  }
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges[i];
    adj[e.src].push_back({e.dst, i});
    if (!e.is_self_loop()) adj[e.dst].push_back({e.src, i});
  }

  std::vector<char> in_handle(g.num_edges(), 0);

  for (int v = 0; v < g.num_vertices; ++v) {
    if (valence[v] == 2) continue;
    for (auto [w, ei] : adj[v]) {
      if (in_handle[ei] || g.edges[ei].is_self_loop() || valence[w] != 2) continue;
      std::vector<int> chain{ei};
      int prev_edge = ei, cur = w;
      while (valence[cur] == 2) {
        int next_edge = -1, next_v = -1;
        for (auto [u, ej] : adj[cur])
          if (ej != prev_edge) {
            next_edge = ej;
            next_v = u;
          }
        if (next_edge == -1) break;
        chain.push_back(next_edge);
        prev_edge = next_edge;
        cur = next_v;
      }
      if (chain.size() >= 2 && valence[cur] != 2) {
        bool fresh = true;
        for (int e2 : chain)
          if (in_handle[e2]) fresh = false;
        if (fresh) {
          for (int e2 : chain) in_handle[e2] = 1;
          out.handles.push_back(Handle{chain});
        }
      }
    }
  }

  auto [comp, h0] = components(g);
  std::vector<char> comp_all_two(h0, 1), comp_nonempty(h0, 0);
  for (int v = 0; v < g.num_vertices; ++v) {
    comp_nonempty[comp[v]] = 1;
    if (valence[v] != 2) comp_all_two[comp[v]] = 0;
  }
  for (int c = 0; c < h0; ++c)
    if (comp_nonempty[c] && comp_all_two[c]) out.degenerate_cycle = true;

  Graph interior;
  interior.num_vertices = g.num_vertices;
  for (int i = 0; i < g.num_edges(); ++i)
    if (!in_handle[i]) {
      interior.edges.push_back(g.edges[i]);
      out.interior_edges.push_back(i);
    }
  out.interior = interior;
  return out;
}

Graph split_biconnected(const Graph& g) {
  auto blocks = biconnected_blocks(g);
  std::vector<int> edge_block(g.num_edges(), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int ei : blocks[b]) edge_block[ei] = static_cast<int>(b);

  // Fresh vertex copies per (block, original vertex); isolated vertices
  // (possible after contracting the only edge of a component) are dropped.
  std::map<std::pair<int, int>, int> vmap;
  int nv = 0;
  Graph out;
  for (int i = 0; i < g.num_edges(); ++i) {
    int b = edge_block[i];
    Edge e = g.edges[i];
    auto localize = [&](int v) {
      auto key = std::make_pair(b, v);
      auto it = vmap.find(key);
      if (it != vmap.end()) return it->second;
      vmap[key] = nv;
      return nv++;
    };
    e.src = localize(e.src);
    e.dst = localize(e.dst);
    out.edges.push_back(std::move(e));
  }
  out.num_vertices = nv;
  return out;
}

Graph contract_merge(const Graph& g, int e) {
  const Edge& ce = g.edges[e];
  if (ce.is_self_loop()) throw Error("contract_merge: self-loop");
  int keep = std::min(ce.src, ce.dst);
  int drop = std::max(ce.src, ce.dst);
  Graph out;
  out.num_vertices = g.num_vertices - 1;
  auto remap = [&](int v) {
    if (v == drop) return keep;
    return v > drop ? v - 1 : v;
  };
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i == e) continue;
    Edge ne = g.edges[i];
    ne.src = remap(ne.src);
    ne.dst = remap(ne.dst);
    out.edges.push_back(std::move(ne));
  }
  return out;
}

}  // namespace motg
