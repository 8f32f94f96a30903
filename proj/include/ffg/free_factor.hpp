#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ffg/automorphism.hpp"
#include "ffg/core_graph.hpp"
#include "ffg/tree.hpp"
#include "ffg/whitehead.hpp"

namespace ffg {

// generators == theta(<x_i : i in basis_subset>)
struct FactorWitness {
  Automorphism theta;
  std::vector<int> basis_subset;
};

// A vertex of the free factor graph. Free factors are only ever built from a
// witness, never recognized from arbitrary generators.
class FreeFactor {
 public:
  // <x_i : i in subset>, 1 <= |subset| < N
  static FreeFactor standard(int rank, std::vector<int> subset);
  // theta(<x_i : i in subset>). Throws DomainError unless the images of
  // theta generate F_N, which makes theta an automorphism.
  static FreeFactor from_witness(const FactorWitness& witness);

  int ambient_rank() const { return graph_.rank(); }
  int factor_rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<Word>& generators() const { return generators_; }
  const CoreGraph& graph() const { return graph_; }
  const std::optional<FactorWitness>& witness() const { return witness_; }

  // phi(A), with the witness composed accordingly.
  FreeFactor image(const Automorphism& phi) const;

  // Folded graph of the witness image matches the stored graph.
  bool witness_consistent() const;

  bool operator==(const FreeFactor& o) const { return graph_ == o.graph_; }

 private:
  FreeFactor(std::vector<Word> generators, std::optional<FactorWitness> witness);

  std::vector<Word> generators_;
  std::optional<FactorWitness> witness_;
  CoreGraph graph_;
};

// Adjacency in AF_N: proper containment for N >= 3; for N = 2 the two cyclic
// factors must be generated by a basis.
bool af_adjacent(const FreeFactor& a, const FreeFactor& b);

// A random chain of `length` moves drawn from the Whitehead moves together
// with the elementary signed permutations.
WhChain random_whitehead_chain(int rank, int length, std::mt19937_64& rng);

FreeFactor random_free_factor(int rank, int factor_rank, int chain_length, std::mt19937_64& rng);
FreeFactor random_free_factor(int rank, int factor_rank, int chain_length, std::uint64_t seed);

// T_A meet X_b, read exactly off the core graph: position t of X_b lies in
// T_A when reading that prefix of b^(+-inf) from the basepoint ends in the
// cyclic core. Empty optional when the intersection is empty. Throws
// UnboundedOverlap when the whole ray stays in T_A.
std::optional<AxisInterval> axis_overlap(const CoreGraph& graph, const Word& b);

struct FactorInvariant {
  long value = 0;
  // true when value is proven to be [A]_b: two adjacent values were
  // observed, or A is cyclic (all its nontrivial elements share one axis),
  // or T_A misses X_b (all axes project to the same point).
  // Otherwise the true value is value or value + 1.
  bool tight = false;
  bool misses_axis = false;
  std::size_t samples = 0;
  long min_observed = 0;
  long max_observed = 0;
};

struct InvariantBudget {
  int initial_depth = 3;
  std::size_t max_elements = 10'000;
};

// [A]_b = sup over a in A of [a]_b, estimated from products of generators.
FactorInvariant factor_invariant(const FreeFactor& a, const MinimalFillingWord& b,
                                 InvariantBudget budget = {});

}  // namespace ffg
