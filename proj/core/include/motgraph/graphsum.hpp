#ifndef MOTGRAPH_GRAPHSUM_HPP
#define MOTGRAPH_GRAPHSUM_HPP

#include <map>
#include <string>
#include <vector>

#include "motgraph/canonical.hpp"

namespace motg {

/// A rational linear combination of canonical graph classes.  Keys are
/// canonical encodings; each key carries its representative graph.
class GraphSum {
 public:
  struct Term {
    Rational coeff;
    Graph rep;
  };

  GraphSum() = default;

  static GraphSum of(const Rational& c, const Graph& g,
                     const CanonicalOptions& opts = {});

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<std::string, Term>& terms() const { return terms_; }

  /// Canonicalize (c, g) and fold it in; zero classes are dropped.
  void add_term(const Rational& c, const Graph& g, const CanonicalOptions& opts = {});
  /// Fold in an already-canonical key/term pair.
  void add_canonical(const std::string& key, const Rational& c, const Graph& rep);

  GraphSum operator+(const GraphSum& o) const;
  GraphSum operator-(const GraphSum& o) const;
  GraphSum operator*(const Rational& q) const;
  bool operator==(const GraphSum& o) const;

  /// Graded product: distributes concatenation over all term pairs.
  GraphSum product(const GraphSum& o, const CanonicalOptions& opts = {}) const;

  /// Restriction to connected (h0 == 1) classes.
  GraphSum connected_part() const;
  GraphSum disconnected_part() const;

  std::string str() const;

 private:
  std::map<std::string, Term> terms_;
};

std::string graphsum_to_json(const GraphSum& s);

}  // namespace motg

#endif
