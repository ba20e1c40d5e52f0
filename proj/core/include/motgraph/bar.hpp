#ifndef MOTGRAPH_BAR_HPP
#define MOTGRAPH_BAR_HPP

#include <map>
#include <string>
#include <vector>

#include "motgraph/dga.hpp"

namespace motg {

using BarWord = std::vector<std::string>;  // canonical factor keys

/// Rational combination of tensor words of canonical graph classes.
/// Words with an empty-graph factor are degenerate and dropped.
class BarElement {
 public:
  BarElement() = default;

  bool empty() const { return terms_.empty(); }
  const std::map<BarWord, Rational>& terms() const { return terms_; }
  const Graph& rep(const std::string& key) const;
  int deg_b(const std::string& key) const;  // algebraic degree - 1

  void register_rep(const std::string& key, const Graph& rep);
  void add_word(const BarWord& word, const Rational& c);
  /// Canonicalize the graph factors of `word_graphs` and fold the word in.
  void add_graphs(const std::vector<Graph>& word_graphs, const Rational& c,
                  const CanonicalOptions& opts = {});

  BarElement operator+(const BarElement& o) const;
  BarElement operator-(const BarElement& o) const;
  BarElement operator*(const Rational& q) const;
  bool operator==(const BarElement& o) const;

  static BarElement from_sum(const GraphSum& s);

  std::string str() const;

 private:
  std::map<BarWord, Rational> terms_;
  std::map<std::string, Graph> reps_;
  std::map<std::string, int> degb_;
  friend BarElement bar_partial(const BarElement&, const CanonicalOptions&);
  friend BarElement bar_mu(const BarElement&, const CanonicalOptions&);
};

/// Algebraic bar differential: signs by the prefix sum of shifted degrees.
BarElement bar_partial(const BarElement& x, const CanonicalOptions& opts = {});

/// Multiplicative bar differential: merges adjacent factors with a Koszul
/// sign carrying one global minus, so that (bar_partial + bar_mu)^2 == 0.
BarElement bar_mu(const BarElement& x, const CanonicalOptions& opts = {});

/// Splits a canonical (possibly disconnected) graph into its connected
/// components, ordered by lowest vertex index, plus the reordering sign s
/// with  concat(components) ~ s * original class.
struct ComponentSplit {
  std::vector<Graph> components;
  Rational sign;
};
ComponentSplit split_components(const Graph& rep, const CanonicalOptions& opts = {});

struct DecomposabilityResult {
  bool decomposable = false;
  std::vector<BarElement> layers;   // the tensor tower, layer k has k factors
  GraphSum failing_connected;       // surviving connected classes on failure
  int depth_reached = 0;
};

/// Iterates the boundary tower: at each stage every surviving word must have
/// its differentiated factor disconnected; components are split off as the
/// next tensor layer until the boundary vanishes.
DecomposabilityResult check_completely_decomposable(const GraphSum& eps, int max_depth = 16,
                                                    const CanonicalOptions& opts = {});

/// Builds a closed element of the bar complex with single-factor part [eps]
/// by solving mu(layer_{k+1}) = -partial(layer_k) layer by layer.
/// Throws LiftObstructed when a layer has no preimage in the candidate span.
BarElement lift_to_bar_closure(const GraphSum& eps, int max_depth = 16,
                               const CanonicalOptions& opts = {});

/// Exact rational solve for a combination x of the candidates with the
/// connected part of dx equal to the connected part of eps.
struct WitnessResult {
  bool found = false;
  std::vector<Rational> coefficients;
};
WitnessResult coboundary_witness_search(const GraphSum& eps,
                                        const std::vector<GraphSum>& candidates,
                                        const CanonicalOptions& opts = {});

}  // namespace motg

#endif
