#pragma once

#include <span>
#include <string>
#include <vector>

#include "ffg/word.hpp"

namespace ffg {

// Folded Stallings graph of a finitely generated subgroup of F_N, trimmed to
// the core with respect to the basepoint. Vertices are numbered in
// breadth-first order from the basepoint (vertex 0) following the letter
// order, so two graphs of the same subgroup compare equal.
class CoreGraph {
 public:
  static CoreGraph fold(int rank, std::span<const Word> generators);

  int rank() const { return rank_; }
  int basepoint() const { return 0; }
  std::size_t vertex_count() const { return targets_.size(); }
  // Positively labelled edges.
  std::size_t edge_count() const;
  // Rank of the subgroup, E - V + 1.
  long subgroup_rank() const;

  // -1 when there is no edge with this label leaving the vertex.
  int target(int vertex, Letter l) const {
    return targets_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(l.vertex())];
  }
  int degree(int vertex) const;
  // Vertices that survive when the basepoint is trimmed too: the image of the
  // minimal invariant subtree in the quotient graph.
  std::vector<bool> cyclic_core() const;

  bool contains(const Word& w) const;
  // Every vertex has all 2N labels in and out: the subgroup has finite index.
  bool is_covering() const;
  bool is_whole_group() const { return vertex_count() == 1 && is_covering(); }
  // Free basis of the subgroup read off a breadth-first spanning tree.
  std::vector<Word> basis() const;
  // H <= this, tested on a basis of H.
  bool contains_subgroup(const CoreGraph& h) const;

  std::string to_dot() const;

  bool operator==(const CoreGraph&) const = default;

 private:
  CoreGraph(int rank, std::vector<std::vector<int>> targets)
      : rank_(rank), targets_(std::move(targets)) {}

  int rank_;
  std::vector<std::vector<int>> targets_;
};

// Two-generator basis test for F_2: <u, v> is the whole group.
bool is_basis_pair(const Word& u, const Word& v);

}  // namespace ffg
