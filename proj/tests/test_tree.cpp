#include <random>

#include "doctest.h"
#include "ffg/error.hpp"
#include "ffg/free_factor.hpp"
#include "ffg/tree.hpp"
#include "ffg/whitehead.hpp"

using namespace ffg;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Vertices g * P(t) of the axis of a = g a0 g^-1, for |t| <= span.
std::vector<Word> axis_vertices(const Word& a, std::size_t span) {
  const auto d = cyclic_reduce(a);
  const Word& a0 = d.core;
  std::vector<Word> out;
  Word forward(a.rank());
  Word backward(a.rank());
  out.push_back(d.conjugator);
  for (std::size_t t = 0; t < span; ++t) {
    forward *= Word(a.rank(), {a0[t % a0.length()]});
    backward *= Word(a.rank(), {a0[a0.length() - 1 - t % a0.length()].inverse()});
    out.push_back(d.conjugator * forward);
    out.push_back(d.conjugator * backward);
  }
  return out;
}

// Position t on X_b of a vertex known to lie on it, by trying all t.
std::optional<long> position_on(const Word& v, const Word& b, long span) {
  for (long t = -span; t <= span; ++t) {
    const auto ti = static_cast<std::size_t>(t < 0 ? -t : t);
    const long q = static_cast<long>(ti / b.length());
    const std::size_t r = ti % b.length();
    Word p = b.power(t < 0 ? -q : q);
    if (t >= 0) {
      p *= b.subword(0, r);
    } else {
      p *= b.inverse().subword(0, r);
    }
    if (p == v) return t;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("distance to an axis examples") {
  const Word b = w2("xyXY");
  auto f = distance_to_axis(Word(2), b);
  CHECK(f.distance == 0);
  CHECK(f.foot.empty());
  const Word g = w2("yyx");
  f = distance_to_axis(Word(2), b.conjugated_by(g));
  CHECK(f.distance == 3);
  CHECK(f.foot == g);
  f = distance_to_axis(w2("x"), w2("y"));
  CHECK(f.distance == 1);
  CHECK(f.foot.empty());
  CHECK_THROWS_AS(distance_to_axis(Word(2), Word(2)), DomainError);
}

TEST_CASE("distance formula matches explicit axis enumeration") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const Word a = random_word(1 + rng() % 8, n, rng).conjugated_by(random_word(rng() % 5, n, rng));
    if (cyclic_reduce(a).core.empty()) continue;
    const Word p = random_word(rng() % 10, n, rng);
    const auto f = distance_to_axis(p, a);
    std::size_t best = SIZE_MAX;
    Word arg(n);
    for (const Word& v : axis_vertices(a, p.length() + a.length() + 4)) {
      const std::size_t d = (p.inverse() * v).length();
      if (d < best) {
        best = d;
        arg = v;
      }
    }
    CHECK(f.distance == best);
    CHECK(f.foot == arg);
  }
}

TEST_CASE("projection examples") {
  const Word b = w2("xyXY");
  CHECK_THROWS_AS(project_axis_to_axis(b, b), DomainError);
  CHECK_THROWS_AS(project_axis_to_axis(b.power(2), b), DomainError);
  const AxisInterval p = project_axis_to_axis(w2("x"), b);
  CHECK(p.meets_axis);
  CHECK(p.lo == 0);
  CHECK(p.hi == 1);
  CHECK(p.length() == 1);
  CHECK(geometric_index(w2("x"), b) == 0);
  CHECK(geometric_index(w2("x").conjugated_by(b.power(2)), b) == 2);
  CHECK(geometric_index(w2("y").conjugated_by(b.power(-3)), b) == -3);
  const AxisInterval q = project_axis_to_axis(w2("x").conjugated_by(b.power(2)), b);
  CHECK(q.lo == 8);
  CHECK(q.hi == 9);
  CHECK(q.lo_power() == 2);
  CHECK(q.lo_offset() == 0);
  CHECK(q.hi_offset() == 1);
  CHECK(q.enclosing_hi() == 3);
}

TEST_CASE("bridge projections are single points") {
  const Word b = w2("xyXY");
  // y Y... : conjugator leaves the axis at once
  const AxisInterval p = project_axis_to_axis(w2("x").conjugated_by(w2("Y")), b);
  CHECK(!p.meets_axis);
  CHECK(p.lo == p.hi);
  CHECK(p.lo == 0);
  // leaves after xy
  const AxisInterval q = project_axis_to_axis(w2("y").conjugated_by(w2("xyx")), b);
  CHECK(!q.meets_axis);
  CHECK(q.lo == 2);
  CHECK(q.hi == 2);
}

TEST_CASE("geometric index equals the combinatorial index") {
  std::mt19937_64 rng(23);
  int nonzero = 0;
  for (int n : {2, 3}) {
    const Word b = surface_boundary_word(n);
    for (int t = 0; t < 1000; ++t) {
      Word a = random_word(1 + rng() % 30, n, rng);
      if (rng() % 2) a = a.conjugated_by(b.power(static_cast<long>(rng() % 7) - 3));
      if (a.length() > 40 || cyclic_reduce(a).core.empty()) continue;
      try {
        const long g = geometric_index(a, b);
        CHECK(g == b_index(a, b));
        nonzero += g != 0;
      } catch (const DomainError&) {
        // only when a shares the axis of b
        CHECK((a * b == b * a));
      }
    }
  }
  CHECK(nonzero > 300);
}

TEST_CASE("projected overlap points lie on both axes") {
  std::mt19937_64 rng(41);
  const Word b = w2("xyXY");
  for (int t = 0; t < 300; ++t) {
    const Word a = random_word(1 + rng() % 6, 2, rng).conjugated_by(random_word(rng() % 8, 2, rng));
    if (cyclic_reduce(a).core.empty() || a * b == b * a) continue;
    const AxisInterval p = project_axis_to_axis(a, b);
    if (!p.meets_axis) continue;
    const auto verts = axis_vertices(a, a.length() * 4 + 40);
    for (long s : {p.lo, p.hi}) {
      bool found = false;
      for (const Word& v : verts) {
        const auto pos = position_on(v, b, std::abs(s) + 1);
        if (pos && *pos == s) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("subtree overlap examples") {
  const Word b = w2("xyXY");
  const Word gx[] = {w2("x")};
  const OverlapEstimate e = subtree_axis_overlap(gx, b, 1);
  CHECK(e.hull.lo == 0);
  CHECK(e.hull.hi == 1);
  const OverlapEstimate e2 = subtree_axis_overlap(gx, b, 2);
  CHECK(e2.stabilized);

  // <x, yxY> contains b = x (yxY)^-1, so it is no free factor
  const Word g2[] = {w2("x"), w2("yxY")};
  CHECK_THROWS_AS(subtree_axis_overlap_auto(g2, b), UnboundedOverlap);
  const Word b3 = parse_word("xxyyzz", 3);
  const Word g3[] = {parse_word("x", 3), parse_word("yzY", 3)};
  const OverlapEstimate e3 = subtree_axis_overlap_auto(g3, b3);
  CHECK(e3.stabilized);
  CHECK(e3.hull.length() <= static_cast<long>(b3.length()));

  const Word gb[] = {b};
  CHECK_THROWS_AS(subtree_axis_overlap(gb, b, 2), UnboundedOverlap);
}

TEST_CASE("overlap of proper free factors is at most |b|") {
  std::mt19937_64 rng(77);
  long exact_checked = 0;
  for (int n : {2, 3}) {
    const Word b = surface_boundary_word(n);
    for (int t = 0; t < 1000; ++t) {
      FreeFactor a = random_free_factor(n, 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)),
                                        static_cast<int>(rng() % 4), rng);
      a = a.image(Automorphism::inner(random_word(rng() % 4, n, rng) *
                                      b.power(static_cast<long>(rng() % 5) - 2)));
      const auto exact = axis_overlap(a.graph(), b);
      if (exact) {
        CHECK(exact->length() <= static_cast<long>(b.length()));
        ++exact_checked;
      }
      if (t % 4 != 0) continue;
      const OverlapEstimate est = subtree_axis_overlap_auto(a.generators(), b);
      if (est.stabilized && est.hull.meets_axis) CHECK(est.hull.length() <= static_cast<long>(b.length()));
      if (exact && est.hull.meets_axis) {
        CHECK(exact->lo <= est.hull.lo);
        CHECK(est.hull.hi <= exact->hi);
      }
      if (!exact) CHECK(!est.hull.meets_axis);
    }
  }
  CHECK(exact_checked > 300);
}

TEST_CASE("bridge property for products") {
  std::mt19937_64 rng(5);
  const Word b = w2("xyXY");
  int tested = 0;
  for (int t = 0; t < 3000 && tested < 200; ++t) {
    const Word a1 = Word::generator(2, 1 + static_cast<int>(rng() % 2))
                        .conjugated_by(random_word(rng() % 10, 2, rng));
    const Word a2 = Word::generator(2, 1 + static_cast<int>(rng() % 2))
                        .conjugated_by(random_word(rng() % 10, 2, rng));
    const AxisInterval p1 = project_axis_to_axis(a1, b);
    const AxisInterval p2 = project_axis_to_axis(a2, b);
    if (p1.hi >= p2.lo && p2.hi >= p1.lo) continue;
    const Word prod = a1 * a2;
    if (prod * b == b * prod) continue;
    ++tested;
    const long from = std::min(p1.hi, p2.hi);
    const long to = std::max(p1.lo, p2.lo);
    const AxisInterval p = project_axis_to_axis(prod, b);
    CHECK(p.lo <= from);
    CHECK(to <= p.hi);
  }
  CHECK(tested >= 100);
}
