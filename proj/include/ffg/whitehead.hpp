#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffg/automorphism.hpp"
#include "ffg/word.hpp"

namespace ffg {

// Cyclic Whitehead graph: vertices are the 2N letters (in Letter::vertex
// order), one edge u -- v^-1 per cyclic turn uv of the cyclic reduction.
// Parallel edges are kept.
class WhiteheadGraph {
 public:
  WhiteheadGraph(int rank, std::vector<std::pair<int, int>> edges);

  int rank() const { return rank_; }
  int vertex_count() const { return 2 * rank_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  int degree(Letter v) const;
  int multiplicity(Letter u, Letter v) const;
  bool connected() const;
  // Connectivity of the induced subgraph on all vertices except `removed`.
  bool connected_without(int removed) const;

 private:
  int rank_;
  std::vector<std::pair<int, int>> edges_;
};

WhiteheadGraph whitehead_graph(const Word& w);

// Lowest vertex (in Letter::vertex order) whose removal disconnects the
// remaining 2N-1 vertices.
std::optional<Letter> find_cut_vertex(const WhiteheadGraph& g);

// All multiplier-kind Whitehead automorphisms of F_N, excluding Z = {a}
// (the identity) and Z = everything but a^-1 (conjugation by a). Built once
// per rank and shared.
const std::vector<WhAutomorphism>& whitehead_moves(int rank);

// Signed permutations that generate the permutation-inversion kind: each
// transposition of two generators and each single inversion.
std::vector<WhAutomorphism> elementary_permutations(int rank);

struct MinimizationCertificate {
  Word input;
  // apply_chain(chain, input), kept unreduced cyclically so the certificate
  // can be replayed exactly.
  Word image;
  // cyclic_reduce(image).core
  Word minimized;
  WhChain chain;
  std::vector<std::size_t> length_trace;
};

MinimizationCertificate minimize_cyclic_length(const Word& w);

bool is_primitive(const Word& w);

enum class WordClass { Primitive, SimpleNonPrimitive, Filling };

std::string to_string(WordClass c);

struct Classification {
  WordClass verdict;
  MinimizationCertificate certificate;
  std::optional<Letter> cut_vertex;
};

Classification classify_with_certificate(const Word& w);
WordClass classify(const Word& w);

struct MinimizingBasis {
  WhChain chain;
  Word word;
};

MinimizingBasis minimizing_basis(const Word& w);

// A word verified to be filling, cyclically reduced, and of minimal length in
// its automorphism orbit. Everything built on [.]_b takes one of these.
class MinimalFillingWord {
 public:
  static MinimalFillingWord verify(const Word& b);

  const Word& word() const { return b_; }
  int rank() const { return b_.rank(); }
  std::size_t length() const { return b_.length(); }

 private:
  explicit MinimalFillingWord(Word b) : b_(std::move(b)) {}
  Word b_;
};

// The orientable (N even: [x1,x2]...[x_{N-1},x_N]) or nonorientable
// (N odd: x1^2...x_N^2) one-boundary surface word.
Word surface_boundary_word(int rank);

}  // namespace ffg
