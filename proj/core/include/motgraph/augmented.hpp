#ifndef MOTGRAPH_AUGMENTED_HPP
#define MOTGRAPH_AUGMENTED_HPP

#include "motgraph/dga.hpp"
#include "motgraph/necklace.hpp"

namespace motg {

/// A graph whose labels may involve the simplex coordinates t1..tm, with the
/// declared support dimension m.  t0 == 0 and t_{m+1} == 1 never appear as
/// stored symbols; they are substituted eagerly.
struct AugGraph {
  Graph graph;
  int simplex_dim = 0;

  /// Twisted degree: algebraic degree minus simplicial dimension.
  int twisted_degree() const { return degree(graph) - simplex_dim; }
};

struct AugTerm {
  Rational coeff;
  AugGraph rep;
};

/// Canonicalization carries the simplex dimension into the key; the label
/// gauge may use simplex coordinates (rescaling by label functions).
struct CanonicalAugTerm {
  bool zero = false;
  std::string key;
  Rational coeff = 0;
  AugGraph representative;
};
CanonicalAugTerm canonical_aug(const Rational& coeff, const AugGraph& a,
                               const CanonicalOptions& opts = {});

/// Rational combination of augmented graph classes.
class AugSum {
 public:
  AugSum() = default;
  static AugSum of(const Rational& c, const AugGraph& a, const CanonicalOptions& opts = {});

  bool empty() const { return terms_.empty(); }
  const std::map<std::string, AugTerm>& terms() const { return terms_; }
  void add_term(const Rational& c, const AugGraph& a, const CanonicalOptions& opts = {});
  void add_canonical(const std::string& key, const Rational& c, const AugGraph& rep);

  AugSum operator+(const AugSum& o) const;
  AugSum operator-(const AugSum& o) const;
  AugSum operator*(const Rational& q) const;
  bool operator==(const AugSum& o) const;

  /// Right module action: concatenate a plain graph onto every term.
  AugSum times_graph(const Graph& g, const CanonicalOptions& opts = {}) const;

  std::string str() const;

 private:
  std::map<std::string, AugTerm> terms_;
};

/// One face substitution (no sign): face 0 sends t1 to 0, faces 0 < i < m
/// identify t_i with t_{i+1}, face m sends t_m to 1; remaining coordinates
/// are renumbered to t1..t_{m-1}.  Terms with a degenerate label are trivial.
struct FaceResult {
  bool trivial = false;
  AugGraph value;  // valid when not trivial
};
FaceResult delta_face(const AugGraph& a, int i);

/// Alternating sum of faces with trivial terms dropped.
struct AugDelta {
  AugSum sum;
  int dropped_trivial = 0;
};
AugDelta aug_delta(const AugGraph& a, const CanonicalOptions& opts = {});
AugDelta aug_delta(const AugSum& s, const CanonicalOptions& opts = {});

/// Contraction differential with the label-function rescaling rule; the
/// simplex dimension is unchanged.
AugSum aug_partial(const AugGraph& a, const CanonicalOptions& opts = {});
AugSum aug_partial(const AugSum& s, const CanonicalOptions& opts = {});

struct AugValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Admissibility of the augmentation: no loop coefficient identically 1 on
/// the simplex or any face chain, zeros always paired with a pole, and at
/// least one face free of poles.
AugValidationReport aug_validate(const AugGraph& a, long cycle_budget = 1000000);

}  // namespace motg

#endif
