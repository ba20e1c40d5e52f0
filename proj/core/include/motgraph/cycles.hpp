#ifndef MOTGRAPH_CYCLES_HPP
#define MOTGRAPH_CYCLES_HPP

#include <string>
#include <vector>

#include "motgraph/analysis.hpp"

namespace motg {

/// One coordinate (1 - x_src/(label * x_dst))^exponent of a parametrized
/// linear cycle; constant coordinates have src_var == dst_var.
struct CycleCoordinate {
  std::string src_var;
  std::string dst_var;
  Monomial label;
  int exponent = +1;  // the sign attribute of the edge

  std::string str() const;
};

struct ParametrizedCycle {
  std::vector<CycleCoordinate> coordinates;  // in edge order
  int codimension = 0;                       // betti1
  int ambient_dimension = 0;                 // edge count

  std::string str() const;
  std::string to_json() const;
};

/// One equation  1 = chi * prod (1 - phi_pos)^eps  of the spanning-tree
/// polynomial system, indexed by a basis loop.
struct LoopEquation {
  Monomial chi;
  std::vector<std::pair<int, int>> factors;  // (coordinate position, eps)

  std::string str() const;
};

struct PolynomialSystem {
  std::vector<LoopEquation> equations;
  std::string basis_note;  // which loop basis produced the system

  std::string str() const;
  std::string to_json() const;
};

ParametrizedCycle emit_parametrization(const Graph& g);

/// Defaults to the fundamental loops of the canonical spanning forest.
PolynomialSystem emit_polynomial_system(const Graph& g,
                                        const std::vector<Loop>* basis = nullptr);

/// Inverse constructor: one vertex per parameterizing variable, one edge per
/// coordinate, oriented numerator -> denominator; constants become
/// self-loops.  Throws NotOneLLinear for unsupported coordinate forms.
Graph graph_from_cycle(const std::vector<CycleCoordinate>& coordinates);

/// Parses a text coordinate like "(1 - x/(3*a*y))^-1" or "1 - 1/a".
CycleCoordinate parse_coordinate(const std::string& text);

}  // namespace motg

#endif
