#include "motgraph/dga.hpp"

#include <sstream>

namespace motg {

std::optional<Graph> contract_edge(const Graph& g, int e) {
  const Edge& ce = g.edges[e];
  if (ce.is_self_loop()) return std::nullopt;
  Graph rescaled = vertex_rescale(g, ce.src, ce.label);
  Graph merged = contract_merge(rescaled, e);
  return split_biconnected(merged);
}

GraphSum differential(const GraphSum& s, const CanonicalOptions& opts) {
  GraphSum out;
  for (const auto& [key, term] : s.terms()) {
    for (int e = 0; e < term.rep.num_edges(); ++e) {
      auto contracted = contract_edge(term.rep, e);
      if (!contracted) continue;
      Rational sign = (e % 2 == 0) ? 1 : -1;  // (-1)^(pos-1), 1-based pos
      out.add_term(term.coeff * sign, *contracted, opts);
    }
  }
  return out;
}

GraphSum differential(const Graph& g, const CanonicalOptions& opts) {
  return differential(GraphSum::of(1, g, opts), opts);
}

std::string AdmissibilityReport::summary() const {
  if (admissible) return "admissible";
  std::ostringstream os;
  os << "inadmissible:";
  for (int c : not_strongly_connected) os << " NotStronglyConnected(component " << c << ")";
  for (const Loop& l : unit_loops) {
    os << " UnitLoop(edges";
    for (auto [e, d] : l.steps) os << ' ' << (e + 1) << (d > 0 ? "+" : "-");
    os << ")";
  }
  return os.str();
}

AdmissibilityReport is_admissible(const Graph& g, long cycle_budget) {
  AdmissibilityReport rep;
  StructureReport st = structure(g);
  for (size_t c = 0; c < st.strongly_connected.size(); ++c)
    if (!st.strongly_connected[c]) {
      rep.admissible = false;
      rep.not_strongly_connected.push_back(static_cast<int>(c));
    }
  for (const Loop& loop : enumerate_simple_cycles(g, cycle_budget)) {
    if (loop_coefficient(g, loop).is_one()) {
      rep.admissible = false;
      rep.unit_loops.push_back(loop);
    }
  }
  return rep;
}

namespace {

// Factor a rational into signed prime exponents; labels are desk-scale so
// trial division is plenty.
std::map<long long, int> factor_rational(const Rational& q, int& sign) {
  using Int = boost::multiprecision::cpp_int;
  Int num = numerator(q), den = denominator(q);
  sign = 1;
  if (num < 0) {
    sign = -1;
    num = -num;
  }
  std::map<long long, int> out;
  auto factor = [&](Int n, int mult) {
    for (Int p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        out[static_cast<long long>(p)] += mult;
        n /= p;
      }
    }
    if (n > 1) out[static_cast<long long>(n)] += mult;
  };
  factor(num, +1);
  factor(den, -1);
  return out;
}

}  // namespace

StrictLoopCheck strict_unit_loop_search(const Graph& g, int box) {
  StrictLoopCheck out;
  LoopData ld = loop_data(g);
  int p = static_cast<int>(ld.chi.size());
  if (p == 0) return out;

  // Exponent vectors over symbols plus prime dimensions plus a sign parity.
  std::vector<std::map<std::string, long long>> vecs(p);
  std::vector<int> parities(p, 0);
  for (int i = 0; i < p; ++i) {
    int sgn = 1;
    for (auto [prime, e] : factor_rational(ld.chi[i].coeff(), sgn))
      vecs[i]["#" + std::to_string(prime)] = e;
    parities[i] = sgn < 0 ? 1 : 0;
    for (const auto& [name, e] : ld.chi[i].exps()) vecs[i][name] = e;
  }

  std::vector<int> k(p, -box);
  while (true) {
    bool nonzero = false;
    for (int v : k)
      if (v != 0) nonzero = true;
    if (nonzero) {
      std::map<std::string, long long> total;
      long long parity = 0;
      for (int i = 0; i < p; ++i) {
        parity += static_cast<long long>(parities[i]) * k[i];
        for (const auto& [name, e] : vecs[i]) total[name] += e * k[i];
      }
      bool unit = (parity % 2 == 0);
      for (const auto& [name, e] : total)
        if (e != 0) unit = false;
      if (unit) {
        out.unit_found = true;
        out.exponents = k;
        return out;
      }
    }
    int i = 0;
    while (i < p && ++k[i] > box) k[i++] = -box;
    if (i == p) break;
  }
  return out;
}

HandleSplit differential_handle_split(const Graph& g, const CanonicalOptions& opts) {
  HandleSplit out;
  HandleDecomposition hd = handle_decomposition(g);
  std::vector<char> in_handle(g.num_edges(), 0);
  for (const Handle& h : hd.handles)
    for (int e : h.edge_path) in_handle[e] = 1;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto contracted = contract_edge(g, e);
    if (!contracted) continue;
    Rational sign = (e % 2 == 0) ? 1 : -1;
    (in_handle[e] ? out.handle_part : out.interior_part).add_term(sign, *contracted, opts);
  }
  return out;
}

DotZeroReport is_dot_zero(const GraphSum& s) {
  DotZeroReport rep;
  rep.connected_survivors = s.connected_part();
  rep.dot_zero = rep.connected_survivors.empty();
  return rep;
}

}  // namespace motg
