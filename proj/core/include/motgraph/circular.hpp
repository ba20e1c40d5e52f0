#ifndef MOTGRAPH_CIRCULAR_HPP
#define MOTGRAPH_CIRCULAR_HPP

#include "motgraph/augmented.hpp"
#include "motgraph/bar.hpp"

namespace motg {

/// Element of the circular bar complex: words with one augmented slot in
/// front and plain canonical graph factors behind it.
class CircularElement {
 public:
  struct Word {
    std::string slot0;  // augmented key
    BarWord tail;
    auto operator<=>(const Word&) const = default;
  };

  CircularElement() = default;

  bool empty() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  const AugGraph& aug_rep(const std::string& key) const;
  const Graph& tail_rep(const std::string& key) const;

  void add_word(const Rational& c, const AugGraph& slot0, const std::vector<Graph>& tail,
                const CanonicalOptions& opts = {});
  void add_canonical(const Rational& c, const std::string& slot0_key, const BarWord& tail);

  CircularElement operator+(const CircularElement& o) const;
  CircularElement operator*(const Rational& q) const;
  bool empty_after(const CircularElement& o) const;

  std::string str() const;

  /// The three differentials of the bicomplex; `total` is their sum.
  CircularElement partial(const CanonicalOptions& opts = {}) const;
  CircularElement delta(const CanonicalOptions& opts = {}) const;
  CircularElement mu(const CanonicalOptions& opts = {}) const;
  CircularElement total_differential(const CanonicalOptions& opts = {}) const;

 private:
  std::map<Word, Rational> terms_;
  std::map<std::string, AugGraph> aug_reps_;
  std::map<std::string, Graph> tail_reps_;
  std::map<std::string, int> tail_degb_;
  friend CircularElement embed_bar(const BarElement& e, const CanonicalOptions& opts);
};

/// 1 (x) e : empty augmented slot in front of every word of e.
CircularElement embed_bar(const BarElement& e, const CanonicalOptions& opts = {});

/// The sigma / rho augmented necklace family.
struct XiFamily {
  std::vector<AugSum> lambda;  // lambda[m], m = 0..n
  std::vector<AugSum> chi;     // chi[m], m = 1..n (index 0 unused, empty)
  AugSum xi_top;               // sum lambda - sum chi
};

XiFamily make_xi_family(const Monomial& a0, const std::vector<Monomial>& beads,
                        const CanonicalOptions& opts = {});

/// bold-xi^n: alternating sum over extracted bead subsets of xi_top tensored
/// with shuffles of the extracted one-edge loops.
CircularElement make_bold_xi(const Monomial& a0, const std::vector<Monomial>& beads,
                             const CanonicalOptions& opts = {});

struct ClosureReport {
  bool closed = false;
  bool identity_alg1 = false;   // boundary of lambda layers
  bool identity_alg2 = false;   // boundary of chi layers
  bool identity_topo1 = false;  // faces of lambda layers
  bool identity_topo2 = false;  // faces of chi layers
  std::string residue;          // nonvanishing part of the total differential
};

/// Verifies (partial + delta + mu)(bold-xi + 1 (x) bold-eps) == 0 and the
/// four layer identities that drive the cancellation.
ClosureReport verify_circular_closure(int n, const CanonicalOptions& opts = {});

}  // namespace motg

#endif
