#pragma once

#include <span>
#include <string>
#include <vector>

#include "ffg/word.hpp"

namespace ffg {

// An endomorphism of F_N given by the images of the generators. The caller is
// responsible for it being invertible; the constructors below only build
// automorphisms.
class Automorphism {
 public:
  explicit Automorphism(std::vector<Word> images);

  static Automorphism identity(int rank);
  // ad_g : w -> g w g^-1
  static Automorphism inner(const Word& g);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const {
    return images_[static_cast<std::size_t>(generator - 1)];
  }

  Word operator()(const Word& w) const;
  // (this->then(next))(w) == next(this(w))
  Automorphism then(const Automorphism& next) const;

  bool operator==(const Automorphism&) const = default;

 private:
  std::vector<Word> images_;
};

// Whitehead automorphism. The multiplier kind with multiplier a and set Z
// (a in Z, a^-1 not in Z) fixes a and sends every other generator v to
//   (v in Z ? a : 1) * v * (v^-1 in Z ? a^-1 : 1).
// The permutation kind sends generator i to a signed generator.
class WhAutomorphism {
 public:
  enum class Kind { PermutationInversion, Multiplier };

  static WhAutomorphism multiplier(int rank, Letter a, std::span<const Letter> set);
  // images[i] is the signed image of generator i+1
  static WhAutomorphism signed_permutation(int rank, std::vector<Letter> images);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  Letter multiplier_letter() const { return multiplier_; }
  bool in_set(Letter l) const { return in_set_[static_cast<std::size_t>(l.vertex())]; }
  const std::vector<Letter>& permutation() const { return permutation_; }

  Word image(int generator) const;
  Word operator()(const Word& w) const;
  WhAutomorphism inverse() const;
  Automorphism as_automorphism() const;

  // "a=x Z={x,Y}" or "perm x->y y->X"
  std::string describe() const;

  bool operator==(const WhAutomorphism&) const = default;

 private:
  WhAutomorphism(int rank, Kind kind) : kind_(kind), rank_(rank) {}

  Kind kind_;
  int rank_;
  Letter multiplier_;
  std::vector<bool> in_set_;
  std::vector<Letter> permutation_;
};

using WhChain = std::vector<WhAutomorphism>;

// Applies chain[0] first, then chain[1], and so on.
Word apply_chain(std::span<const WhAutomorphism> chain, const Word& w);
Automorphism chain_automorphism(int rank, std::span<const WhAutomorphism> chain);
WhChain inverse_chain(std::span<const WhAutomorphism> chain);

}  // namespace ffg
