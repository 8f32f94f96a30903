#include <random>

#include "doctest.h"
#include "ffg/error.hpp"
#include "ffg/experiments.hpp"
#include "ffg/farey.hpp"
#include "oracles.hpp"

using namespace ffg;

namespace {
Word w2(const char* s) { return parse_word(s, 2); }
}  // namespace

TEST_CASE("slope normalization") {
  CHECK(Slope(-2, -3) == Slope(2, 3));
  CHECK(Slope(-1, 0) == Slope(1, 0));
  CHECK(Slope(3, -2).str() == "-3/2");
  CHECK(Slope(0, -1) == Slope(0, 1));
  CHECK_THROWS_AS(Slope(0, 0), DomainError);
  CHECK_THROWS_AS(Slope(2, 4), DomainError);
  CHECK(parse_slope("1/0") == Slope(1, 0));
  CHECK(parse_slope("-3/7") == Slope(-3, 7));
  CHECK_THROWS_AS(parse_slope("3"), DomainError);
  CHECK_THROWS_AS(parse_slope("a/2"), DomainError);
  CHECK_THROWS_AS(parse_slope("1/2x"), DomainError);
}

TEST_CASE("slopes of primitive elements") {
  CHECK(slope_of(w2("x")) == Slope(1, 0));
  CHECK(slope_of(w2("y")) == Slope(0, 1));
  CHECK(slope_of(w2("xy")) == Slope(1, 1));
  CHECK(slope_of(w2("xyy")) == Slope(1, 2));
  CHECK(slope_of(w2("Yx")) == Slope(1, -1));
  CHECK_THROWS_AS(slope_of(w2("xx")), DomainError);
  CHECK_THROWS_AS(slope_of(w2("xyXY")), DomainError);
  CHECK_THROWS_AS(slope_of(Word(2)), DomainError);
  CHECK_THROWS_AS(slope_of(parse_word("x", 3)), DomainError);
  CHECK(of2_project(FreeFactor::standard(2, {2})) == Slope(0, 1));
}

TEST_CASE("farey distance examples") {
  CHECK(farey_distance(Slope(1, 0), Slope(0, 1)) == 1);
  CHECK(farey_distance(Slope(1, 0), Slope(1, 0)) == 0);
  CHECK(farey_distance(Slope(0, 1), Slope(1, 1)) == 1);
  CHECK(farey_distance(Slope(1, 0), Slope(1, 2)) == 2);
  CHECK(farey_distance(Slope(1, 0), Slope(2, 5)) == 3);
  // 5/8 = [0; 1, 1, 1, 2]: the 1s let the path skip convergents
  CHECK(farey_distance(Slope(1, 0), Slope(5, 8)) == 3);
  CHECK(farey_distance(Slope(1, 2), Slope(-1, 2)) == 2);
  CHECK(farey_adjacent(Slope(1, 2), Slope(1, 3)));
  CHECK(!farey_adjacent(Slope(1, 2), Slope(1, 4)));
}

TEST_CASE("farey distance equals breadth-first search in a box") {
  const auto box = oracle::farey_bfs(12);
  const std::size_t n = box.slopes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Slope s(box.slopes[i].first, box.slopes[i].second);
    for (std::size_t j = 0; j < n; ++j) {
      const Slope t(box.slopes[j].first, box.slopes[j].second);
      REQUIRE(farey_distance(s, t) == box.dist[i][j]);
    }
  }
}

TEST_CASE("metric axioms on random slopes") {
  std::mt19937_64 rng(17);
  auto random_slope = [&rng] {
    for (;;) {
      const long p = static_cast<long>(rng() % 2001) - 1000;
      const long q = static_cast<long>(rng() % 1001);
      if (std::gcd(p, q) == 1) return Slope(p, q);
    }
  };
  for (int t = 0; t < 2000; ++t) {
    const Slope a = random_slope(), b = random_slope(), c = random_slope();
    const long ab = farey_distance(a, b);
    CHECK(ab == farey_distance(b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(farey_distance(a, c) <= ab + farey_distance(b, c));
    CHECK((ab == 1) == farey_adjacent(a, b));
  }
}

TEST_CASE("projection of basis pairs is 1-Lipschitz") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 500; ++t) {
    const Automorphism phi = chain_automorphism(2, random_whitehead_chain(2, 1 + static_cast<int>(rng() % 8), rng));
    const Word u = phi(w2("x"));
    const Word v = phi(w2("y"));
    REQUIRE(is_basis_pair(u, v));
    CHECK(farey_distance(slope_of(u), slope_of(v)) == 1);
    CHECK(slope_of(u.conjugated_by(random_word(rng() % 5, 2, rng))) == slope_of(u));
  }
}

TEST_CASE("closest orbit point") {
  OrbitWindow w{-2, {Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(0, 1)}};
  CHECK(closest_orbit_point(Slope(0, 1), w) == -1);
  CHECK(closest_orbit_point(Slope(1, 0), w) == -2);
  CHECK(closest_orbit_point(Slope(2, 1), w) == -2);
  CHECK_THROWS_AS(closest_orbit_point(Slope(1, 0), OrbitWindow{}), DomainError);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    OrbitWindow win{static_cast<long>(rng() % 7) - 3, {}};
    for (int j = 0; j < 6; ++j) {
      const long p = static_cast<long>(rng() % 41) - 20;
      const long q = static_cast<long>(rng() % 21);
      if (std::gcd(p, q) == 1) win.slopes.emplace_back(p, q);
    }
    if (win.slopes.empty()) continue;
    const Slope target(1, static_cast<long>(rng() % 9));
    const long idx = closest_orbit_point(target, win);
    const long best = farey_distance(target, win.slopes[static_cast<std::size_t>(idx - win.first_index)]);
    for (std::size_t j = 0; j < win.slopes.size(); ++j) {
      const long d = farey_distance(target, win.slopes[j]);
      CHECK(d >= best);
      if (static_cast<long>(j) + win.first_index < idx) CHECK(d > best);
    }
  }
}

TEST_CASE("boundary automorphism acts loxodromically on slopes") {
  const BoundaryAutomorphism psi = build_boundary_pA();
  CHECK(psi.fixes_b);
  CHECK(psi.is_pA);
  CHECK(psi.trace() == 3);
  CHECK(psi.determinant() == 1);
  // slopes of psi^j(x) through the homology matrix, so that large j stay cheap
  long p = 1, q = 0;
  long prev = 0;
  Word x = w2("x");
  for (int j = 1; j <= 12; ++j) {
    const long np = psi.homology[0][0] * p + psi.homology[0][1] * q;
    const long nq = psi.homology[1][0] * p + psi.homology[1][1] * q;
    p = np;
    q = nq;
    if (j <= 5) {
      x = psi.phi(x);
      CHECK(slope_of(x) == Slope(p, q));
    }
    const long d = farey_distance(Slope(1, 0), Slope(p, q));
    CHECK(d > prev);
    prev = d;
  }
  CHECK(prev >= 10);
}
