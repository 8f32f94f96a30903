#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ffg {

// A generator x_i or its formal inverse, stored as the signed index +-i.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, bool inverted)
      : code_(inverted ? -generator : generator) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int generator() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool inverted() const { return code_ < 0; }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }

  // Position in the fixed vertex order x1, X1, x2, X2, ... used by Whitehead
  // graphs and multiplier sets.
  constexpr int vertex() const { return 2 * (generator() - 1) + (inverted() ? 1 : 0); }
  static constexpr Letter from_vertex(int v) { return Letter(v / 2 + 1, (v % 2) == 1); }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter& o) const { return vertex() <=> o.vertex(); }

 private:
  int code_ = 1;
};

// Compact single-character name for rank <= 26, token name ("x7", "X7") above.
std::string letter_name(Letter l, int rank);

// A freely reduced word in F_N. Every constructor reduces, so a Word never
// contains an adjacent pair (l, l^-1). The empty word is the identity.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters);

  static Word generator(int rank, int index, bool inverted = false);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);
  Word power(long exponent) const;
  // g * this * g^-1
  Word conjugated_by(const Word& g) const;
  // Contiguous piece of the reduced word; pieces of reduced words are reduced.
  Word subword(std::size_t pos, std::size_t count) const;
  bool is_cyclically_reduced() const;

  // Exponent sum of each generator, indexed 0..rank-1.
  std::vector<long> exponent_sums() const;

  std::string str() const;

  bool operator==(const Word& o) const = default;
  auto operator<=>(const Word& o) const = default;

 private:
  struct Trusted {};
  Word(int rank, std::vector<Letter> reduced, Trusted);

  int rank_;
  std::vector<Letter> letters_;

  friend Word free_reduce(int rank, std::span<const Letter> letters);
};

// Stack-based free reduction of an arbitrary letter sequence.
Word free_reduce(int rank, std::span<const Letter> letters);

// Accepts compact form ("xyX": x,y,z then a..w name generators 1..26,
// uppercase is the inverse) or token form ("x1 X2 x1"). "1" and the empty
// string denote the identity.
Word parse_word(std::string_view text, int rank);

struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

// w = conjugator * core * conjugator^-1 with the conjugator as long as possible.
CyclicDecomposition cyclic_reduce(const Word& w);
std::size_t cyclic_length(const Word& w);

// w == b^k * core * b^-k as a literal concatenation, with |k| maximal.
struct BReducedDecomposition {
  long k = 0;
  Word core;
  Word b;
};

BReducedDecomposition b_reduced_decomposition(const Word& w, const Word& b);
long b_index(const Word& w, const Word& b);

// Uniform reduced word of exactly the given length.
Word random_word(std::size_t length, int rank, std::mt19937_64& rng);
Word random_word(std::size_t length, int rank, std::uint64_t seed);

void check_rank(int rank);

}  // namespace ffg
