#ifndef MOTGRAPH_NECKLACE_HPP
#define MOTGRAPH_NECKLACE_HPP

#include "motgraph/bar.hpp"

namespace motg {

enum class NecklaceKind { Left, Right };

/// Ring of n two-edge beads plus a marked top edge labeled a0.  Bead i runs
/// between junctions v_{i-1} and v_i (a_i edge forward, unit edge back); the
/// Left top edge runs v_n -> v_0, the Right one v_0 -> v_n.  Edge order: top
/// edge first, then per bead the unit edge at position 2i and the a_i edge
/// at position 2i+1.  n = 0 degenerates to the one-edge loop.
Graph make_necklace(NecklaceKind kind, const Monomial& a0,
                    const std::vector<Monomial>& beads);

/// Single self-loop labeled a.
Graph make_loop_graph(const Monomial& a);

/// eps^n(a0, beads) = Left(a0, beads) - Right(1/a0, beads).
GraphSum make_eps(const Monomial& a0, const std::vector<Monomial>& beads,
                  const CanonicalOptions& opts = {});

/// The closed bar element with single-factor part [eps^n]: alternating sums
/// of bead extractions tensored with shuffles of extracted one-edge loops.
BarElement make_bold_eps(const Monomial& a0, const std::vector<Monomial>& beads,
                         const CanonicalOptions& opts = {});

}  // namespace motg

#endif
