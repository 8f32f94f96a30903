#include "ffg/tree.hpp"

#include <algorithm>
#include <optional>

#include "ffg/error.hpp"

namespace ffg {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

std::size_t mod(long a, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

// A ray in the tree read as letters, starting at a vertex of an axis.
struct AxisRay {
  const Word* period;
  long start;
  bool backward;

  Letter at(long i) const {
    const std::size_t n = period->length();
    if (!backward) return (*period)[mod(start + i, n)];
    return (*period)[mod(start - 1 - i, n)].inverse();
  }
};

std::size_t common_prefix(const AxisRay& r, const AxisRay& s, std::size_t limit) {
  std::size_t i = 0;
  while (i < limit && r.at(static_cast<long>(i)) == s.at(static_cast<long>(i))) ++i;
  return i;
}

// Length along X_b of the overlap between the ray of X_b from position t0
// (in the given direction) and X_a, whose base vertex sits at t0.
std::size_t ray_overlap(const Word& b, long t0, bool backward, const Word& a_core) {
  const AxisRay along_b{&b, t0, backward};
  const std::size_t limit = a_core.length() + b.length();
  std::size_t best = 0;
  for (const bool a_backward : {false, true}) {
    const AxisRay along_a{&a_core, 0, a_backward};
    const std::size_t len = common_prefix(along_b, along_a, limit);
    if (len >= limit) throw DomainError("axes coincide: the word commutes with b");
    best = std::max(best, len);
  }
  return best;
}

void check_axis_word(const Word& b) {
  if (b.empty()) throw DomainError("axis word b must be nonempty");
  if (!b.is_cyclically_reduced()) throw DomainError("axis word b must be cyclically reduced");
}

}  // namespace

long AxisInterval::lo_power() const { return floor_div(lo, period()); }
long AxisInterval::hi_power() const { return floor_div(hi, period()); }
long AxisInterval::enclosing_hi() const { return ceil_div(hi, period()); }

AxisFoot distance_to_axis(const Word& p, const Word& a) {
  if (a.empty()) throw DomainError("the identity has no axis");
  if (p.rank() != a.rank()) throw DomainError("rank mismatch");
  // d(p, X_a) = (d(p, a p) - l(a)) / 2; the closest point is p followed by
  // the conjugator of p^-1 a p.
  const Word moved = p.inverse() * a * p;
  const std::size_t translation = cyclic_length(a);
  const std::size_t distance = (moved.length() - translation) / 2;
  const Word conjugator = cyclic_reduce(moved).conjugator;
  return {distance, p * conjugator};
}

AxisInterval project_axis_to_axis(const Word& a, const Word& b) {
  check_axis_word(b);
  if (a.empty()) throw DomainError("the identity has no axis");
  if (a.rank() != b.rank()) throw DomainError("rank mismatch");
  const auto [conjugator, core] = cyclic_reduce(a);

  // How far the path from 1 to X_a runs along X_b, and in which direction.
  long along = 0;
  for (const bool backward : {false, true}) {
    const long sign = backward ? -1 : 1;
    const AxisRay ray{&b, 0, backward};
    std::size_t m = 0;
    while (m < conjugator.length() && conjugator[m] == ray.at(static_cast<long>(m))) ++m;
    if (m > 0) {
      along = sign * static_cast<long>(m);
      break;
    }
  }
  const long reached = along < 0 ? -along : along;
  if (static_cast<std::size_t>(reached) < conjugator.length()) {
    // The path leaves X_b before reaching X_a, so the axes are disjoint and
    // X_a projects to the exit point.
    return {b, along, along, false};
  }
  const std::size_t forward = ray_overlap(b, along, false, core);
  const std::size_t backward = ray_overlap(b, along, true, core);
  return {b, along - static_cast<long>(backward), along + static_cast<long>(forward), true};
}

long geometric_index(const Word& a, const Word& b) {
  const AxisInterval proj = project_axis_to_axis(a, b);
  const long i = proj.enclosing_lo();
  const long j = proj.enclosing_hi();
  if (i > 0) return i;
  if (j < 0) return j;
  return 0;
}

namespace {

struct HullAccumulator {
  std::optional<AxisInterval> hull;
  void add(const AxisInterval& piece) {
    if (!hull) {
      hull = piece;
      return;
    }
    hull->lo = std::min(hull->lo, piece.lo);
    hull->hi = std::max(hull->hi, piece.hi);
    hull->meets_axis = hull->meets_axis || piece.meets_axis;
  }
};

}  // namespace

OverlapEstimate subtree_axis_overlap(std::span<const Word> generators, const Word& b, int depth) {
  check_axis_word(b);
  if (generators.empty()) throw DomainError("subgroup needs at least one generator");
  if (depth < 1) throw DomainError("depth must be at least 1");

  // Breadth-first over reduced generator words; each node keeps its last
  // generator letter (+-(i+1)) so inverse pairs are never formed.
  struct Node {
    Word element;
    int last;
  };
  std::vector<Node> frontier;
  const int gens = static_cast<int>(generators.size());
  HullAccumulator previous;
  HullAccumulator current;
  std::size_t elements = 0;

  auto project = [&](const Word& element) {
    try {
      return project_axis_to_axis(element, b);
    } catch (const DomainError&) {
      throw UnboundedOverlap("subgroup element " + element.str() + " shares the axis of b");
    }
  };

  frontier.push_back({Word(b.rank()), 0});
  for (int level = 1; level <= depth; ++level) {
    previous = current;
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int g = 1; g <= gens; ++g) {
        for (const int s : {g, -g}) {
          if (node.last == -s) continue;
          const Word& gen = generators[static_cast<std::size_t>(g - 1)];
          Word element = node.element * (s > 0 ? gen : gen.inverse());
          if (!element.empty()) {
            current.add(project(element));
            ++elements;
          }
          next.push_back({std::move(element), s});
        }
      }
    }
    frontier = std::move(next);
  }
  if (!current.hull) throw DomainError("subgroup generators are all trivial");
  const bool stable = previous.hull && previous.hull->lo == current.hull->lo &&
                      previous.hull->hi == current.hull->hi;
  return {*current.hull, stable, depth, elements};
}

OverlapEstimate subtree_axis_overlap_auto(std::span<const Word> generators, const Word& b,
                                          int max_depth) {
  int depth = std::min(4, max_depth);
  OverlapEstimate est = subtree_axis_overlap(generators, b, depth);
  est.stabilized = false;
  while (depth < max_depth) {
    depth = std::min(depth * 2, max_depth);
    OverlapEstimate deeper = subtree_axis_overlap(generators, b, depth);
    deeper.stabilized = deeper.hull == est.hull;
    est = std::move(deeper);
    if (est.stabilized) break;
  }
  return est;
}

}  // namespace ffg
