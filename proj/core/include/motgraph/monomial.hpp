#ifndef MOTGRAPH_MONOMIAL_HPP
#define MOTGRAPH_MONOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motgraph/errors.hpp"

namespace motg {

using Rational = boost::multiprecision::cpp_rational;

/// Index of a simplex coordinate, or nullopt for an ordinary generator.
/// Simplex coordinates use the reserved names "t0", "t1", ... ; everything
/// else is a generator of the label group.
std::optional<int> simplex_index(const std::string& name);

std::string simplex_name(int index);

/// An element of the multiplicative label group: a nonzero rational times a
/// product of named symbols with integer exponents.  Stored normalized: no
/// zero exponents, map keyed by symbol name.
class Monomial {
 public:
  Monomial() : coeff_(1) {}
  explicit Monomial(Rational c);
  Monomial(Rational c, std::map<std::string, int> exps);

  static Monomial one() { return Monomial(); }
  static Monomial symbol(const std::string& name, int exp = 1);

  const Rational& coeff() const { return coeff_; }
  const std::map<std::string, int>& exps() const { return exps_; }

  bool is_one() const { return coeff_ == 1 && exps_.empty(); }
  bool is_constant() const { return exps_.empty(); }
  int exponent(const std::string& name) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  bool operator==(const Monomial& o) const {
    return coeff_ == o.coeff_ && exps_ == o.exps_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const;

  /// Does any simplex coordinate appear?
  bool has_simplex_coordinate() const;
  int max_simplex_index() const;

  /// Deterministic text form, e.g. "2/3*a0*t2^-1"; doubles as key material.
  std::string str() const;

 private:
  Rational coeff_;
  std::map<std::string, int> exps_;
};

/// Result of a substitution: a label may degenerate to 0 or infinity.
struct ExtLabel {
  enum class Kind { Regular, Zero, Infinity };
  Kind kind = Kind::Regular;
  Monomial value;  // meaningful only when kind == Regular

  static ExtLabel regular(Monomial m) { return {Kind::Regular, std::move(m)}; }
  static ExtLabel zero() { return {Kind::Zero, Monomial()}; }
  static ExtLabel infinity() { return {Kind::Infinity, Monomial()}; }
  bool is_regular() const { return kind == Kind::Regular; }
};

/// One substitution target: a monomial, 0, or infinity.
struct SubstTarget {
  ExtLabel::Kind kind = ExtLabel::Kind::Regular;
  Monomial value;

  static SubstTarget to(Monomial m) {
    return {ExtLabel::Kind::Regular, std::move(m)};
  }
  static SubstTarget to_zero() { return {ExtLabel::Kind::Zero, Monomial()}; }
};

using SubstRule = std::map<std::string, SubstTarget>;

/// Multiplicative substitution.  A symbol sent to 0 contributes Zero when its
/// net exponent is positive and Infinity when negative; a zero net exponent
/// has no limit and raises IndeterminateForm.
ExtLabel substitute(const Monomial& m, const SubstRule& rule);

/// Numeric value of the monomial under a full assignment of its symbols.
double evaluate(const Monomial& m, const std::map<std::string, double>& assignment);

Monomial parse_monomial(const std::string& text);

}  // namespace motg

#endif
