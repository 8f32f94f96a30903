#pragma once

#include <cstddef>
#include <span>

#include "ffg/word.hpp"

namespace ffg {

// Geometry of the Cayley tree of F_N for the standard basis. Vertices are
// reduced words; no tree is materialized. Positions along the axis X_b of a
// cyclically reduced b are measured in letters: position t is the prefix of
// length t of b^inf (t >= 0) or of b^-inf (t < 0), so b^i sits at i*|b|.

struct AxisFoot {
  std::size_t distance;
  Word foot;
};

// Distance from p to the axis X_a and the closest point of X_a.
AxisFoot distance_to_axis(const Word& p, const Word& a);

struct AxisInterval {
  Word axis;
  long lo = 0;
  long hi = 0;
  // false when the projected set misses X_b and the interval is the single
  // landing point of the bridge
  bool meets_axis = false;

  long period() const { return static_cast<long>(axis.length()); }
  long length() const { return hi - lo; }
  long lo_power() const;
  long lo_offset() const { return lo - lo_power() * period(); }
  long hi_power() const;
  long hi_offset() const { return hi - hi_power() * period(); }
  // Smallest i, largest-needed j with [lo, hi] inside [b^i, b^j].
  long enclosing_lo() const { return lo_power(); }
  long enclosing_hi() const;

  bool operator==(const AxisInterval&) const = default;
};

// Orthogonal projection of X_a onto X_b. Throws DomainError when the two
// axes coincide (a commutes with b).
AxisInterval project_axis_to_axis(const Word& a, const Word& b);

// i if i > 0, j if j < 0, else 0, where [b^i, b^j] is the minimal interval
// containing the projection of X_a.
long geometric_index(const Word& a, const Word& b);

struct OverlapEstimate {
  AxisInterval hull;
  bool stabilized = false;
  int depth = 0;
  std::size_t elements = 0;
};

// Hull of the projections of X_a over all nontrivial reduced products a of
// at most `depth` generators (and inverses). `stabilized` records whether
// the hull at depth-1 was already the same. Throws UnboundedOverlap if some
// product has the same axis as b.
OverlapEstimate subtree_axis_overlap(std::span<const Word> generators, const Word& b, int depth);

// Starts at depth 4 and doubles until the hull survives a doubling of the
// depth. `stabilized` is false when max_depth is reached first. Hulls can
// stay put for one level and then grow, so depth-1 agreement is not used.
OverlapEstimate subtree_axis_overlap_auto(std::span<const Word> generators, const Word& b,
                                          int max_depth = 8);

}  // namespace ffg
