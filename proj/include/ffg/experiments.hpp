#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ffg/automorphism.hpp"
#include "ffg/free_factor.hpp"
#include "ffg/report.hpp"
#include "ffg/whitehead.hpp"

namespace ffg {

// Independent stream for trial `index`, so trials can be run in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

// Surface boundary word of rank N, certified minimal and filling.
MinimalFillingWord default_boundary(int rank);

// For w = b^3 a b^-3: whether reduction keeps the first and last |b|+1
// letters of the unreduced concatenation, and [w]_b.
struct CancellationCheck {
  bool retained = false;
  long index = 0;
  std::size_t reduced_length = 0;
};
CancellationCheck check_cancellation(const MinimalFillingWord& b, const Word& a);

ExperimentReport exp_lipschitz(const MinimalFillingWord& b, std::size_t trials, std::uint64_t seed);
ExperimentReport exp_cancellation(const MinimalFillingWord& b, std::size_t trials,
                                  std::uint64_t seed);
// f(k) = [b^k a b^-k]_b for k in [k_lo, k_hi]; an empty range when k_lo > k_hi.
ExperimentReport exp_fzero_fiber(const MinimalFillingWord& b, const Word& a, long k_lo, long k_hi);

// Second minimizing basis T, given by the automorphism beta with T-words of
// elements equal to beta applied to their S-words.
struct SecondBasis {
  WhChain chain;
  Automorphism beta;
  Word rewritten_b;
};

// Deterministic search for a length-neutral non-permutation chain on b,
// composed with a signed permutation. Throws DomainError when none exists
// within `max_moves` moves.
SecondBasis find_second_basis(const MinimalFillingWord& b, std::uint64_t seed, int max_moves = 2);
ExperimentReport exp_basis_change(const MinimalFillingWord& b, std::size_t trials,
                                  std::uint64_t seed);
ExperimentReport exp_basis_change(const MinimalFillingWord& b, const SecondBasis& basis,
                                  std::size_t trials, std::uint64_t seed);

struct BoundaryAutomorphism {
  Automorphism phi;
  Automorphism inverse;
  Word b;
  bool fixes_b = false;
  std::array<std::array<long, 2>, 2> homology{};
  bool is_pA = false;

  long trace() const { return homology[0][0] + homology[1][1]; }
  long determinant() const {
    return homology[0][0] * homology[1][1] - homology[0][1] * homology[1][0];
  }
};

// psi: x -> xy, y -> yxy, the composite of the twists x -> xy and y -> yx.
// Throws std::logic_error if any of its verifications fail.
BoundaryAutomorphism build_boundary_pA();

// Explicit path <from> = v0, v1, ..., vm = <to> in AF_2, each step certified
// by is_basis_pair. Searches states (u, c) with u, c a basis, moving to
// <u^i c u^j> for |i|, |j| <= exponent_bound.
std::optional<std::vector<Word>> af2_path(const Word& from, const Word& complement,
                                          const Word& to, int max_edges, int exponent_bound = 2);

ExperimentReport exp_quasiflat(int radius, std::uint64_t seed);
ExperimentReport exp_boundary_length(const std::vector<int>& ranks);
ExperimentReport exp_displacement_stability(int radius, std::uint64_t seed);

}  // namespace ffg
