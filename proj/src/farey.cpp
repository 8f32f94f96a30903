#include "ffg/farey.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "ffg/error.hpp"
#include "ffg/whitehead.hpp"

namespace ffg {

namespace {

__extension__ using Wide = __int128;

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// u*a + v*b == gcd(a, b)
void extended_gcd(long a, long b, long& u, long& v) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = floor_div(old_r, r);
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
}

long checked(Wide value) {
  if (value > std::numeric_limits<long>::max() || value < std::numeric_limits<long>::min())
    throw DomainError("slope coordinates overflow");
  return static_cast<long>(value);
}

}  // namespace

Slope::Slope(long p, long q) : p_(p), q_(q) {
  if (p == 0 && q == 0) throw DomainError("slope 0/0 is not a Farey vertex");
  if (std::gcd(p, q) != 1) {
    throw DomainError("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not primitive");
  }
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::string Slope::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Slope parse_slope(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw DomainError("slope must be written p/q");
  long p = 0;
  long q = 0;
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  auto r1 = std::from_chars(num.data(), num.data() + num.size(), p);
  auto r2 = std::from_chars(den.data(), den.data() + den.size(), q);
  if (r1.ec != std::errc{} || r1.ptr != num.data() + num.size() || r2.ec != std::errc{} ||
      r2.ptr != den.data() + den.size())
    throw DomainError("cannot parse slope '" + std::string(text) + "'");
  return Slope(p, q);
}

Slope slope_of(const Word& w) {
  if (w.rank() != 2) throw DomainError("slopes are defined for F_2 only");
  if (w.empty() || !is_primitive(w)) {
    throw DomainError("slope_of needs a primitive element, got " + w.str());
  }
  const auto sums = w.exponent_sums();
  return Slope(sums[0], sums[1]);
}

bool farey_adjacent(const Slope& s, const Slope& t) {
  const Wide det = static_cast<Wide>(s.p()) * t.q() - static_cast<Wide>(s.q()) * t.p();
  return det == 1 || det == -1;
}

long farey_distance(const Slope& s, const Slope& t) {
  if (s == t) return 0;
  long u = 0;
  long v = 0;
  extended_gcd(t.p(), t.q(), u, v);
  // [[u, v], [-q, p]] has determinant 1 and sends t to 1/0.
  long p = checked(static_cast<Wide>(u) * s.p() + static_cast<Wide>(v) * s.q());
  long q = checked(-static_cast<Wide>(t.q()) * s.p() + static_cast<Wide>(t.p()) * s.q());
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // Walk the convergents of p/q. Consecutive convergents are adjacent, and
  // c_{k-2} is adjacent to c_k exactly when the k-th partial quotient is 1.
  // dist_prev2 / dist_prev hold the distances from 1/0 to c_{k-2}, c_{k-1}.
  long num = p;
  long den = q;
  long dist_prev2 = 0;  // c_{-1} = 1/0
  long dist_prev = 1;   // c_0 = a_0 / 1
  long r = num - floor_div(num, den) * den;
  num = den;
  den = r;
  while (den != 0) {
    const long a = floor_div(num, den);
    r = num - a * den;
    num = den;
    den = r;
    long dist = dist_prev + 1;
    if (a == 1) dist = std::min(dist, dist_prev2 + 1);
    dist_prev2 = dist_prev;
    dist_prev = dist;
  }
  return dist_prev;
}

Slope of2_project(const FreeFactor& a) {
  if (a.ambient_rank() != 2 || a.factor_rank() != 1)
    throw DomainError("OF_2 projection needs a cyclic factor of F_2");
  return slope_of(a.generators().front());
}

long closest_orbit_point(const Slope& target, const OrbitWindow& window) {
  if (window.slopes.empty()) throw DomainError("closest_orbit_point needs a nonempty window");
  long best_index = window.first_index;
  long best = farey_distance(target, window.slopes.front());
  for (std::size_t j = 1; j < window.slopes.size(); ++j) {
    const long d = farey_distance(target, window.slopes[j]);
    if (d < best) {
      best = d;
      best_index = window.first_index + static_cast<long>(j);
    }
  }
  return best_index;
}

}  // namespace ffg
