#ifndef MOTGRAPH_CANONICAL_HPP
#define MOTGRAPH_CANONICAL_HPP

#include <map>
#include <optional>
#include <string>

#include "motgraph/analysis.hpp"
#include "motgraph/graph.hpp"

namespace motg {

/// Multiply (divide) the label of every edge terminating (starting) at v by
/// alpha; self-loops at v are unchanged.
Graph vertex_rescale(const Graph& g, int v, const Monomial& alpha);

/// Rescale so that every edge of the canonical spanning forest (the loop_data
/// choice) carries label 1.  Idempotent; output is equivalent to the input
/// under vertex rescaling.
Graph gauge_fix(const Graph& g);

struct CanonicalOptions {
  int vertex_budget = 10;
  long candidate_budget = 40000000;  // bijections x forests guard
};

/// Canonical form of a scalar multiple of a graph under the order, vertex
/// rescaling, and global orientation-reversal equivalences.
///
/// The canonical key is the lexicographically minimal encoding over both
/// global orientations and all vertex numberings compatible with a degree
/// invariant, with labels gauge-fixed per candidate and all edge signs
/// normalized to +.  The coefficient accumulates one -1 per normalized sign
/// and the parity of the edge re-sorting.  A term whose minimal encoding is
/// reachable with both parities is identically zero (an odd self-equivalence)
/// and is reported as such.
struct CanonicalTerm {
  bool zero = false;
  std::string key;       // raw deterministic bytes; hex via key_to_hex
  Rational coeff = 0;
  Graph representative;  // canonically numbered, gauge-fixed, sorted edges
};

CanonicalTerm canonical_form(const Rational& coeff, const Graph& g,
                             const CanonicalOptions& opts = {});

std::string key_to_hex(const std::string& key);

/// Weight (first Betti number) and algebraic degree of a representative.
struct Bigrade {
  int weight = 0;
  int degree = 0;
  bool operator==(const Bigrade& o) const = default;
};
Bigrade bigrade(const Graph& g);

}  // namespace motg

#endif
