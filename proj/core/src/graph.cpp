#include "motgraph/graph.hpp"

#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

namespace motg {

using nlohmann::json;

Graph validate_graph(const Graph& g) {
  std::vector<std::string> problems;
  if (g.num_vertices < 0) problems.push_back("negative vertex count");
  std::vector<char> incident(std::max(g.num_vertices, 0), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges[i];
    if (e.src < 0 || e.src >= g.num_vertices || e.dst < 0 || e.dst >= g.num_vertices) {
      problems.push_back("edge " + std::to_string(i + 1) + ": InvalidVertexIndex (" +
                         std::to_string(e.src) + "->" + std::to_string(e.dst) + ")");
      continue;
    }
    incident[e.src] = incident[e.dst] = 1;
    if (e.sign != 1 && e.sign != -1)
      problems.push_back("edge " + std::to_string(i + 1) + ": sign must be +1 or -1");
    if (e.label.coeff() == 0)
      problems.push_back("edge " + std::to_string(i + 1) + ": ZeroLabel");
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (!incident[v]) problems.push_back("vertex " + std::to_string(v) + ": IsolatedVertex");
  if (!problems.empty()) {
    std::ostringstream os;
    os << "invalid graph:";
    for (const auto& p : problems) os << "\n  " << p;
    throw InvalidGraph(os.str());
  }
  return g;
}

Graph make_graph(int num_vertices,
                 std::vector<std::tuple<int, int, std::string>> edges) {
  Graph g;
  g.num_vertices = num_vertices;
  for (auto& [s, d, lab] : edges) g.edges.push_back({s, d, parse_monomial(lab), +1});
  return validate_graph(g);
}

Graph concat(const Graph& a, const Graph& b) {
  Graph r = a;
  r.num_vertices += b.num_vertices;
  for (Edge e : b.edges) {
    e.src += a.num_vertices;
    e.dst += a.num_vertices;
    r.edges.push_back(std::move(e));
  }
  return r;
}

std::pair<std::vector<int>, int> components(const Graph& g) {
  std::vector<int> comp(g.num_vertices, -1);
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (const Edge& e : g.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  int count = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return {comp, count};
}

int betti0(const Graph& g) { return components(g).second; }

int betti1(const Graph& g) { return g.num_edges() - g.num_vertices + betti0(g); }

int degree(const Graph& g) { return betti1(g) - g.num_vertices + betti0(g); }

static json monomial_to_json(const Monomial& m) {
  json j;
  j["coeff"] = {numerator(m.coeff()).str(), denominator(m.coeff()).str()};
  json e = json::object();
  for (const auto& [name, exp] : m.exps()) e[name] = exp;
  j["exps"] = e;
  return j;
}

static Monomial monomial_from_json(const json& j) {
  Rational c(1);
  if (j.contains("coeff")) {
    const auto& cj = j.at("coeff");
    if (cj.is_array()) {
      Rational num{cj.at(0).is_string() ? cj.at(0).get<std::string>()
                                        : std::to_string(cj.at(0).get<long long>())};
      Rational den{cj.size() > 1 ? (cj.at(1).is_string()
                                        ? cj.at(1).get<std::string>()
                                        : std::to_string(cj.at(1).get<long long>()))
                                 : std::string("1")};
      if (den == 0) throw Error("monomial json: zero denominator");
      c = num / den;
    } else if (cj.is_number_integer()) {
      c = Rational(cj.get<long long>());
    } else if (cj.is_string()) {
      c = Rational(cj.get<std::string>());
    }
  }
  std::map<std::string, int> exps;
  if (j.contains("exps"))
    for (auto it = j.at("exps").begin(); it != j.at("exps").end(); ++it)
      exps[it.key()] = it.value().get<int>();
  return Monomial(c, std::move(exps));
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.num_vertices;
  json edges = json::array();
  for (const Edge& e : g.edges) {
    json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["label"] = monomial_to_json(e.label);
    je["sign"] = e.sign;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  Graph g;
  g.num_vertices = j.at("vertices").get<int>();
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.src = je.at("src").get<int>();
    e.dst = je.at("dst").get<int>();
    if (je.contains("label")) {
      if (je.at("label").is_string())
        e.label = parse_monomial(je.at("label").get<std::string>());
      else
        e.label = monomial_from_json(je.at("label"));
    }
    e.sign = je.value("sign", 1);
    g.edges.push_back(std::move(e));
  }
  return validate_graph(g);
}

}  // namespace motg
