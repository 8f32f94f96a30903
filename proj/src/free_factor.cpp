#include "ffg/free_factor.hpp"

#include <algorithm>
#include <numeric>

#include "ffg/error.hpp"

namespace ffg {

FreeFactor::FreeFactor(std::vector<Word> generators, std::optional<FactorWitness> witness)
    : generators_(std::move(generators)),
      witness_(std::move(witness)),
      graph_(CoreGraph::fold(generators_.front().rank(), generators_)) {}

FreeFactor FreeFactor::standard(int rank, std::vector<int> subset) {
  check_rank(rank);
  std::sort(subset.begin(), subset.end());
  if (subset.empty() || static_cast<int>(subset.size()) >= rank)
    throw DomainError("a proper nontrivial free factor needs between 1 and N-1 basis elements");
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw DomainError("basis subset has repeated entries");
  std::vector<Word> gens;
  for (const int i : subset) {
    if (i < 1 || i > rank) throw DomainError("basis index outside rank");
    gens.push_back(Word::generator(rank, i));
  }
  return FreeFactor(std::move(gens), FactorWitness{Automorphism::identity(rank), std::move(subset)});
}

FreeFactor FreeFactor::from_witness(const FactorWitness& witness) {
  const int rank = witness.theta.rank();
  const auto& images = witness.theta.images();
  if (!CoreGraph::fold(rank, images).is_whole_group())
    throw DomainError("witness images do not generate the free group, so it is not an automorphism");
  return standard(rank, witness.basis_subset).image(witness.theta);
}

FreeFactor FreeFactor::image(const Automorphism& phi) const {
  if (phi.rank() != ambient_rank()) throw DomainError("rank mismatch applying automorphism");
  std::vector<Word> gens;
  gens.reserve(generators_.size());
  for (const Word& g : generators_) gens.push_back(phi(g));
  std::optional<FactorWitness> w;
  if (witness_) w = FactorWitness{witness_->theta.then(phi), witness_->basis_subset};
  return FreeFactor(std::move(gens), std::move(w));
}

bool FreeFactor::witness_consistent() const {
  if (!witness_) return false;
  std::vector<Word> gens;
  for (const int i : witness_->basis_subset) gens.push_back(witness_->theta.image(i));
  return CoreGraph::fold(ambient_rank(), gens) == graph_;
}

bool af_adjacent(const FreeFactor& a, const FreeFactor& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DomainError("free factors of different ranks");
  if (a.ambient_rank() == 2) {
    if (a.factor_rank() != 1 || b.factor_rank() != 1) throw DomainError("F_2 factors are cyclic");
    return is_basis_pair(a.generators().front(), b.generators().front());
  }
  if (a.graph() == b.graph()) return false;
  return a.graph().contains_subgroup(b.graph()) || b.graph().contains_subgroup(a.graph());
}

WhChain random_whitehead_chain(int rank, int length, std::mt19937_64& rng) {
  const auto& moves = whitehead_moves(rank);
  const auto perms = elementary_permutations(rank);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() + perms.size() - 1);
  WhChain chain;
  for (int i = 0; i < length; ++i) {
    const std::size_t k = pick(rng);
    chain.push_back(k < moves.size() ? moves[k] : perms[k - moves.size()]);
  }
  return chain;
}

FreeFactor random_free_factor(int rank, int factor_rank, int chain_length, std::mt19937_64& rng) {
  check_rank(rank);
  if (factor_rank < 1 || factor_rank >= rank)
    throw DomainError("factor rank must satisfy 1 <= r < N");
  if (chain_length < 0) throw DomainError("chain length must be nonnegative");
  std::vector<int> all(static_cast<std::size_t>(rank));
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> subset(all.begin(), all.begin() + factor_rank);
  const WhChain chain = random_whitehead_chain(rank, chain_length, rng);
  return FreeFactor::standard(rank, subset).image(chain_automorphism(rank, chain));
}

FreeFactor random_free_factor(int rank, int factor_rank, int chain_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_free_factor(rank, factor_rank, chain_length, rng);
}

namespace {

// Positions 0, 1, 2, ... (forward) or 0, -1, -2, ... (backward) of X_b that
// land in the cyclic core, as the farthest such step.
std::optional<long> farthest_core_step(const CoreGraph& graph, const std::vector<bool>& core,
                                       const Word& b, bool forward, long& nearest) {
  const std::size_t n = b.length();
  const std::size_t limit = graph.vertex_count() * n + 1;
  std::optional<long> far;
  std::optional<long> near;
  int at = graph.basepoint();
  for (std::size_t step = 0;; ++step) {
    if (core[static_cast<std::size_t>(at)]) {
      if (!near) near = static_cast<long>(step);
      far = static_cast<long>(step);
    } else if (far) {
      break;
    }
    if (step > limit) throw UnboundedOverlap("a ray of the axis of b stays inside the factor's subtree");
    const Letter l = forward ? b[step % n] : b[n - 1 - step % n].inverse();
    at = graph.target(at, l);
    if (at < 0) break;
  }
  if (near) nearest = *near;
  return far;
}

}  // namespace

std::optional<AxisInterval> axis_overlap(const CoreGraph& graph, const Word& b) {
  if (b.rank() != graph.rank()) throw DomainError("rank mismatch between graph and axis");
  if (b.empty() || !b.is_cyclically_reduced())
    throw DomainError("axis word must be nontrivial and cyclically reduced");
  const std::vector<bool> core = graph.cyclic_core();
  long near_fwd = 0;
  long near_bwd = 0;
  const auto fwd = farthest_core_step(graph, core, b, true, near_fwd);
  const auto bwd = farthest_core_step(graph, core, b, false, near_bwd);
  if (!fwd && !bwd) return std::nullopt;
  AxisInterval out{b, 0, 0, true};
  if (fwd && bwd) {
    // A subtree meets the line in an interval, so both rays start at 0.
    out.lo = -*bwd;
    out.hi = *fwd;
  } else if (fwd) {
    out.lo = near_fwd;
    out.hi = *fwd;
  } else {
    out.lo = -*bwd;
    out.hi = -near_bwd;
  }
  return out;
}

FactorInvariant factor_invariant(const FreeFactor& a, const MinimalFillingWord& b,
                                 InvariantBudget budget) {
  if (a.ambient_rank() != b.rank()) throw DomainError("rank mismatch between factor and b");
  if (a.graph().is_whole_group()) throw DomainError("the whole group is not a proper free factor");
  if (a.graph().contains(b.word()))
    throw DomainError("factor contains the filling word b, so it is not a proper free factor");
  const Word& bw = b.word();

  FactorInvariant out;
  bool any = false;
  auto observe = [&](const Word& element) {
    if (element.empty()) return;
    const long k = b_index(element, bw);
    if (!any) {
      out.min_observed = out.max_observed = k;
      any = true;
    } else {
      out.min_observed = std::min(out.min_observed, k);
      out.max_observed = std::max(out.max_observed, k);
    }
    ++out.samples;
  };

  const auto& gens = a.generators();
  if (gens.size() == 1) {
    // Every power of a generator has the same axis, hence the same index.
    observe(gens.front());
    out.value = out.max_observed;
    out.tight = true;
    out.misses_axis = !axis_overlap(a.graph(), bw).has_value();
    return out;
  }

  if (!axis_overlap(a.graph(), bw)) {
    observe(gens.front());
    out.value = out.max_observed;
    out.tight = true;
    out.misses_axis = true;
    return out;
  }

  struct Node {
    Word element;
    int last;
  };
  std::vector<Node> frontier{{Word(a.ambient_rank()), 0}};
  const int count = static_cast<int>(gens.size());
  for (int level = 1; !frontier.empty(); ++level) {
    const bool past_initial = level > budget.initial_depth;
    if (past_initial && out.max_observed > out.min_observed) break;
    std::vector<Node> next;
    bool exhausted = false;
    for (const Node& node : frontier) {
      for (int g = 1; g <= count && !exhausted; ++g) {
        for (const int s : {g, -g}) {
          if (node.last == -s) continue;
          if (past_initial && out.samples >= budget.max_elements) {
            exhausted = true;
            break;
          }
          const Word& gen = gens[static_cast<std::size_t>(g - 1)];
          Word element = node.element * (s > 0 ? gen : gen.inverse());
          observe(element);
          next.push_back({std::move(element), s});
        }
      }
      if (exhausted) break;
    }
    if (exhausted) break;
    frontier = std::move(next);
  }
  if (!any) throw DomainError("factor has no nontrivial sampled element");
  if (out.max_observed - out.min_observed > 1) {
    throw DomainError("observed [a]_b values " + std::to_string(out.min_observed) + " and " +
                      std::to_string(out.max_observed) +
                      " differ by more than 1 inside one proper free factor");
  }
  out.value = out.max_observed;
  out.tight = out.max_observed > out.min_observed;
  return out;
}

}  // namespace ffg
