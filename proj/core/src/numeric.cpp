#include "motgraph/numeric.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace motg {

NumericResult polylog(int s, double x) {
  if (s < 1) throw DomainError("polylog: order must be >= 1");
  if (std::abs(x) > 1.0 || (s == 1 && x == 1.0))
    throw DomainError("polylog: outside the convergence domain");
  NumericResult r;
  r.method = NumericResult::Method::Series;
  if (x == 0.0) return r;
  double term_base = 1.0;
  double sum = 0.0;
  const double ax = std::abs(x);
  for (int k = 1; k < 100000; ++k) {
    term_base *= x;
    double term = term_base / std::pow(static_cast<double>(k), s);
    sum += term;
    // geometric tail bound: |x|^(k+1)/((k+1)^s (1-|x|))
    double tail = std::pow(ax, k + 1) / (std::pow(k + 1.0, s) * (1.0 - ax));
    if (ax < 1.0 && tail < 1e-12) {
      r.value = sum;
      r.error = tail;
      return r;
    }
    if (ax == 1.0 && std::abs(term) < 1e-13 && k > 1000) {
      r.value = sum;
      r.error = std::abs(term) * k;  // crude bound for the alternating/zeta tail
      return r;
    }
  }
  throw NonConvergent("polylog: series did not meet the tail bound");
}

namespace {

double letter_value(const FormLetter& f, int level, const std::vector<double>& coords) {
  double t = coords[level];
  switch (f.kind) {
    case FormLetter::Kind::DtOverT:
      return 1.0 / t;
    case FormLetter::Kind::DtOverBMinusT:
      return 1.0 / (f.b - t);
    case FormLetter::Kind::DlogSigma: {
      // t_j-component of dlog(1 - 1/sigma) = e_j / (t_j (sigma - 1))
      int ej = f.sigma.exponent(simplex_name(level + 1));
      if (ej == 0) throw Error("iterated_integral: letter lacks its own coordinate");
      double sigma = f.scale * static_cast<double>(f.sigma.coeff());
      for (const auto& [name, e] : f.sigma.exps()) {
        auto idx = simplex_index(name);
        if (!idx) throw Error("iterated_integral: non-numeric parameter " + name);
        sigma *= std::pow(coords[*idx - 1], e);
      }
      return static_cast<double>(ej) / (t * (sigma - 1.0));
    }
  }
  return 0.0;
}

struct Integrator {
  const IteratedWord& word;
  std::vector<double> coords;
  double base_tol;
  mutable long evals = 0;

  double inner_value(int level, double upper, double tol) const;

  // adaptive Simpson on [0, upper] of level's integrand
  double integrand(int level, double t, double tol) const {
    auto& self = const_cast<Integrator&>(*this);
    self.coords[level] = t;
    double v = letter_value(word.letters[level], level, coords);
    if (level > 0) v *= inner_value(level - 1, t, tol);
    return v;
  }

  double simpson(int level, double a, double b, double fa, double fm, double fb,
                 double tol, int depth) const {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = integrand(level, lm, tol * 0.5);
    double frm = integrand(level, rm, tol * 0.5);
    evals += 2;
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    double diff = left + right - whole;
    if (depth <= 0) {
      if (std::abs(diff) > 1000 * tol)
        throw ToleranceNotMet("iterated_integral: adaptive depth exhausted");
      return left + right + diff / 15.0;
    }
    if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson(level, a, m, fa, flm, fm, tol * 0.5, depth - 1) +
           simpson(level, m, b, fm, frm, fb, tol * 0.5, depth - 1);
  }

  double integrate_level(int level, double upper, double tol) const {
    if (upper <= 0) return 0.0;
    // open lower endpoint: start slightly inside and extrapolate by splitting
    double a = upper * 1e-14;
    double b = upper;
    double fa = integrand(level, a, tol);
    double m = 0.5 * (a + b);
    double fm = integrand(level, m, tol);
    double fb = integrand(level, b, tol);
    evals += 3;
    return simpson(level, a, b, fa, fm, fb, tol, 52);
  }

  double value(double tol) const {
    int top = static_cast<int>(word.letters.size()) - 1;
    if (top < 0) return 1.0;
    return inner_value(top, 1.0, tol);
  }
};

double Integrator::inner_value(int level, double upper, double tol) const {
  const FormLetter& f = word.letters[level];
  if (level == 0 && f.kind == FormLetter::Kind::DtOverT && f.regularized)
    return std::log(upper);
  auto& self = const_cast<Integrator&>(*this);
  double saved = coords[level];
  double v = self.integrate_level(level, upper, tol);
  self.coords[level] = saved;
  return v;
}

}  // namespace

NumericResult iterated_integral(const IteratedWord& word, double tol) {
  for (size_t i = 0; i < word.letters.size(); ++i) {
    if (word.letters[i].regularized && i != 0)
      throw Error("iterated_integral: only the innermost letter may be regularized");
    if (word.letters[i].regularized &&
        word.letters[i].kind != FormLetter::Kind::DtOverT)
      throw Error("iterated_integral: only dt/t letters are regularized");
    if (i == 0 && word.letters[i].kind == FormLetter::Kind::DtOverT &&
        !word.letters[i].regularized)
      throw NonConvergent("iterated_integral: divergent innermost dt/t letter");
  }
  Integrator in{word, std::vector<double>(word.letters.size(), 0.0), tol};
  NumericResult r;
  r.method = NumericResult::Method::Quadrature;
  r.value = in.value(tol);
  r.error = tol;
  return r;
}

namespace {

FormLetter chain_letter(double parameter, int lower_coord, int upper_coord, int top_coord) {
  // sigma = parameter * t_upper / t_lower; coordinates past the top are 1
  FormLetter l;
  l.kind = FormLetter::Kind::DlogSigma;
  l.scale = parameter;
  Monomial m = Monomial::symbol(simplex_name(lower_coord), -1);
  if (upper_coord <= top_coord) m = m * Monomial::symbol(simplex_name(upper_coord));
  l.sigma = m;
  return l;
}

}  // namespace

PeriodResult necklace_period(const std::vector<double>& labels, double tol) {
  if (labels.size() < 2)
    throw DomainError("necklace_period: need a0 and at least one bead");
  for (double a : labels)
    if (!(a > 1.0))
      throw DomainError("necklace_period: labels must exceed 1 for a pole-free simplex");
  int n = static_cast<int>(labels.size()) - 1;
  int m_top = n + 1;  // top-layer simplicial dimension

  PeriodResult out;

  // lambda word: reg dt/t at u1, then dlog(a_i u_{i+2}/u_{i+1}) for i = 1..n
  IteratedWord lam;
  {
    FormLetter head;
    head.kind = FormLetter::Kind::DtOverT;
    head.regularized = true;
    lam.letters.push_back(head);
    for (int i = 1; i <= n; ++i)
      lam.letters.push_back(chain_letter(labels[i], i + 1, i + 2, m_top));
  }
  out.lambda_word_nested = iterated_integral(lam, tol).value;

  // chi word: dlog(a_1 u_3/u_1) at u1, dt/t at u2, then the same chain
  IteratedWord chi;
  {
    chi.letters.push_back(chain_letter(labels[1], 1, 3, m_top));
    FormLetter head;
    head.kind = FormLetter::Kind::DtOverT;
    chi.letters.push_back(head);
    for (int i = 2; i <= n; ++i)
      chi.letters.push_back(chain_letter(labels[i], i + 1, i + 2, m_top));
  }
  out.chi_word_nested = iterated_integral(chi, tol).value;

  // The edge order puts the head letter first; for chi the head integrates
  // u2 while its first split-off loop integrates u1, a transposition in the
  // wedge, hence the relative minus.
  double lambda_wedge = +1.0, chi_wedge = -1.0;

  double period = 0.0;
  // lambda: J over beads {1..n}; the word integral does not depend on the
  // head label, which is the a0-independence this layer encodes.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int bits = 0;
    double head = labels[0];
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        ++bits;
        head *= labels[i + 1];
      }
    double v = lambda_wedge * out.lambda_word_nested;
    std::ostringstream hs;
    hs << head;
    out.lambda_summands.push_back({hs.str(), v});
    period += (bits % 2 == 0 ? 1.0 : -1.0) * v;
  }
  // chi: I over beads {2..n}
  int ichoices = n >= 1 ? (1 << (n - 1)) : 1;
  for (int mask = 0; mask < ichoices; ++mask) {
    int bits = 0;
    double head = labels[0];
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1 << i)) {
        ++bits;
        head *= labels[i + 2];
      }
    double v = chi_wedge * out.chi_word_nested;
    std::ostringstream hs;
    hs << head;
    out.chi_summands.push_back({hs.str(), v});
    period -= (bits % 2 == 0 ? 1.0 : -1.0) * v;
  }

  out.period.value = period;
  out.period.error = tol * (out.lambda_summands.size() + out.chi_summands.size());
  out.period.method = NumericResult::Method::Quadrature;
  return out;
}

}  // namespace motg
