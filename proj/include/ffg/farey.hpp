#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ffg/free_factor.hpp"
#include "ffg/word.hpp"

namespace ffg {

// Primitive vector +-(p, q) of Z^2, normalized so q > 0, or q = 0 and p = 1.
// Vertices of the Farey graph, which models OF_2.
class Slope {
 public:
  Slope(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }
  std::string str() const;

  bool operator==(const Slope&) const = default;
  auto operator<=>(const Slope&) const = default;

 private:
  long p_;
  long q_;
};

Slope parse_slope(std::string_view text);

// Exponent-sum vector of a primitive element of F_2.
Slope slope_of(const Word& w);

bool farey_adjacent(const Slope& s, const Slope& t);

// Graph distance in the Farey graph: t is moved to 1/0 by an element of
// SL(2,Z), and the distance from 1/0 to the image of s is read off the
// continued fraction expansion.
long farey_distance(const Slope& s, const Slope& t);

// Projection AF_2 -> OF_2 of a cyclic factor.
Slope of2_project(const FreeFactor& a);

struct OrbitWindow {
  long first_index = 0;
  std::vector<Slope> slopes;
};

// argmin over j of farey_distance(target, slopes[j]); earliest index wins ties.
// Returns the absolute index first_index + j.
long closest_orbit_point(const Slope& target, const OrbitWindow& window);

}  // namespace ffg
