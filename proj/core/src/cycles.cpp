#include "motgraph/cycles.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace motg {

std::string CycleCoordinate::str() const {
  std::ostringstream os;
  bool constant = src_var == dst_var;
  if (exponent != 1) os << '(';
  os << "1 - ";
  if (constant) {
    os << "1/(" << label.str() << ")";
  } else {
    os << src_var << "/(" << label.str() << "*" << dst_var << ")";
  }
  if (exponent != 1) os << ")^" << exponent;
  return os.str();
}

std::string ParametrizedCycle::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coordinates.size(); ++i) {
    if (i) os << " | ";
    os << coordinates[i].str();
  }
  os << "]  codim " << codimension << " in square^" << ambient_dimension;
  return os.str();
}

std::string ParametrizedCycle::to_json() const {
  nlohmann::json j;
  j["codimension"] = codimension;
  j["ambient_dimension"] = ambient_dimension;
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : coordinates) {
    nlohmann::json jc;
    jc["form"] = "one-minus-ratio";
    jc["numerator_var"] = c.src_var;
    jc["denominator_var"] = c.dst_var;
    jc["constant"] = c.src_var == c.dst_var;
    jc["label"] = c.label.str();
    jc["exponent"] = c.exponent;
    jc["text"] = c.str();
    coords.push_back(jc);
  }
  j["coordinates"] = coords;
  return j.dump(2);
}

std::string LoopEquation::str() const {
  std::ostringstream os;
  os << "1 = " << chi.str();
  for (auto [pos, eps] : factors) {
    os << " * (1-f" << (pos + 1) << ")";
    if (eps != 1) os << "^" << eps;
  }
  return os.str();
}

std::string PolynomialSystem::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < equations.size(); ++i) {
    if (i) os << "\n";
    os << equations[i].str();
  }
  if (!basis_note.empty()) os << "\n# basis: " << basis_note;
  return os.str();
}

std::string PolynomialSystem::to_json() const {
  nlohmann::json j;
  j["basis"] = basis_note;
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& e : equations) {
    nlohmann::json je;
    je["chi"] = e.chi.str();
    nlohmann::json fs = nlohmann::json::array();
    for (auto [pos, eps] : e.factors) fs.push_back({{"coordinate", pos + 1}, {"eps", eps}});
    je["factors"] = fs;
    je["text"] = e.str();
    eqs.push_back(je);
  }
  j["equations"] = eqs;
  return j.dump(2);
}

static std::string vertex_var(int v) { return "x" + std::to_string(v); }

ParametrizedCycle emit_parametrization(const Graph& g) {
  ParametrizedCycle out;
  out.ambient_dimension = g.num_edges();
  out.codimension = betti1(g);
  for (const Edge& e : g.edges)
    out.coordinates.push_back({vertex_var(e.src), vertex_var(e.dst), e.label, e.sign});
  return out;
}

PolynomialSystem emit_polynomial_system(const Graph& g, const std::vector<Loop>* basis) {
  PolynomialSystem out;
  std::vector<Loop> fallback;
  if (!basis) {
    LoopData ld = loop_data(g);
    fallback = ld.fundamental;
    basis = &fallback;
    out.basis_note = "fundamental loops of the canonical spanning forest";
  } else {
    out.basis_note = "caller-provided loop basis";
  }
  for (const Loop& loop : *basis) {
    LoopEquation eq;
    eq.chi = loop_coefficient(g, loop);
    for (auto [ei, dir] : loop.steps) eq.factors.push_back({ei, dir});
    out.equations.push_back(std::move(eq));
  }
  return out;
}

Graph graph_from_cycle(const std::vector<CycleCoordinate>& coordinates) {
  Graph g;
  std::map<std::string, int> vertex_of;
  auto vert = [&](const std::string& name) {
    auto it = vertex_of.find(name);
    if (it != vertex_of.end()) return it->second;
    int v = g.num_vertices++;
    vertex_of[name] = v;
    return v;
  };
  int fresh = 0;
  for (const CycleCoordinate& c : coordinates) {
    Edge e;
    if (c.src_var == c.dst_var) {
      // constant coordinate 1 - 1/a: a one-edge loop at a fresh vertex
      std::string name = c.src_var.empty()
                             ? "__const" + std::to_string(fresh++)
                             : c.src_var;
      e.src = e.dst = vert(name);
    } else {
      e.src = vert(c.src_var);
      e.dst = vert(c.dst_var);
    }
    e.label = c.label;
    e.sign = c.exponent;
    g.edges.push_back(std::move(e));
  }
  return validate_graph(g);
}

// Text grammar:  coord := atom | '(' atom ')' '^' int
//                atom  := '1' '-' ratio
//                ratio := var '/' '(' mono '*' var ')' | '1/(' mono ')' | var '/(' mono '*' var ')'
// Anything shaped like a bare ratio (no leading "1 -") is rejected as not
// 1L-linear.
CycleCoordinate parse_coordinate(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  int exponent = 1;
  if (!s.empty() && s[0] == '(') {
    size_t close = s.rfind(')');
    if (close == std::string::npos) throw Error("parse_coordinate: unbalanced parens");
    std::string tail = s.substr(close + 1);
    if (!tail.empty()) {
      if (tail[0] != '^') throw Error("parse_coordinate: expected ^ after ')'");
      exponent = std::stoi(tail.substr(1));
      s = s.substr(1, close - 1);
    }
  }

  if (s.rfind("1-", 0) != 0)
    throw NotOneLLinear("parse_coordinate: coordinate is not of the form 1 - u/(a*v): " + text);
  std::string ratio = s.substr(2);

  size_t slash = ratio.find('/');
  if (slash == std::string::npos)
    throw NotOneLLinear("parse_coordinate: missing '/' in " + text);
  std::string num = ratio.substr(0, slash);
  std::string den = ratio.substr(slash + 1);
  if (den.size() >= 2 && den.front() == '(' && den.back() == ')')
    den = den.substr(1, den.size() - 2);

  auto is_var = [](const std::string& v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  };

  CycleCoordinate out;
  out.exponent = exponent;
  if (num == "1") {
    // constant 1 - 1/a
    out.src_var = out.dst_var = "";
    out.label = parse_monomial(den);
    return out;
  }
  if (!is_var(num))
    throw NotOneLLinear("parse_coordinate: numerator must be a single variable: " + text);
  out.src_var = num;
  // denominator: mono '*' var with var the last '*'-separated token
  size_t star = den.rfind('*');
  if (star == std::string::npos) {
    if (is_var(den)) {
      out.dst_var = den;
      out.label = Monomial::one();
      return out;
    }
    throw NotOneLLinear("parse_coordinate: denominator must end in a variable: " + text);
  }
  std::string dvar = den.substr(star + 1);
  if (!is_var(dvar))
    throw NotOneLLinear("parse_coordinate: denominator must end in a variable: " + text);
  out.dst_var = dvar;
  out.label = parse_monomial(den.substr(0, star));
  return out;
}

}  // namespace motg
