#ifndef MOTGRAPH_NUMERIC_HPP
#define MOTGRAPH_NUMERIC_HPP

#include <vector>

#include "motgraph/monomial.hpp"

namespace motg {

struct NumericResult {
  double value = 0;
  double error = 0;
  enum class Method { Series, Quadrature } method = Method::Series;
};

/// Series polylog Li_s(x) for |x| <= 1 (x != 1 when s == 1), tail below 1e-12.
NumericResult polylog(int s, double x);

/// One letter of an iterated integral over the ordered simplex.  The letter
/// in simplex coordinate t_j is either the t_j-component of
/// dlog(1 - 1/sigma) for a monomial sigma (parameters already numeric), or
/// one of the primitive kinds dt/t and dt/(b - t).
struct FormLetter {
  enum class Kind { DlogSigma, DtOverT, DtOverBMinusT };
  Kind kind = Kind::DtOverT;
  Monomial sigma;     // DlogSigma: monomial in t-coordinates only
  double scale = 1.0; // numeric parameter multiplying sigma
  double b = 0;       // DtOverBMinusT
  bool regularized = false;  // innermost dt/t replaced by log t
};

/// Letters ordered innermost first; letter k integrates coordinate t_{k+1}.
struct IteratedWord {
  std::vector<FormLetter> letters;
};

/// Adaptive nested quadrature of the word over the ordered simplex.
NumericResult iterated_integral(const IteratedWord& word, double tol = 1e-10);

struct PeriodSummand {
  std::string head;   // head label text, e.g. "a0*a2"
  double value = 0;   // word integral including the edge-order wedge sign
};

struct PeriodResult {
  NumericResult period;                  // combined value of the top layer
  std::vector<PeriodSummand> lambda_summands;
  std::vector<PeriodSummand> chi_summands;
  double lambda_word_nested = 0;  // bare nested integrals, for cross-checks
  double chi_word_nested = 0;
};

/// Evaluates the top-simplex layer of the augmented necklace family at
/// numeric labels a0..an (all > 1) and combines the alternating sums.
PeriodResult necklace_period(const std::vector<double>& labels, double tol = 1e-10);

}  // namespace motg

#endif
