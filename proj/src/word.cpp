#include "ffg/word.hpp"

#include <algorithm>
#include <cctype>

#include "ffg/error.hpp"

namespace ffg {

namespace {

constexpr std::string_view kCompactAlphabet = "xyzabcdefghijklmnopqrstuvw";

int compact_index(char c) {
  const auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto pos = kCompactAlphabet.find(lower);
  return pos == std::string_view::npos ? 0 : static_cast<int>(pos) + 1;
}

void check_letters(int rank, std::span<const Letter> letters) {
  for (const Letter l : letters) {
    if (l.code() == 0 || l.generator() > rank) {
      throw DomainError("generator index " + std::to_string(l.generator()) +
                        " outside rank " + std::to_string(rank));
    }
  }
}

}  // namespace

void check_rank(int rank) {
  if (rank < 2) throw DomainError("rank must be at least 2, got " + std::to_string(rank));
}

std::string letter_name(Letter l, int rank) {
  if (rank <= static_cast<int>(kCompactAlphabet.size())) {
    char c = kCompactAlphabet[static_cast<std::size_t>(l.generator() - 1)];
    if (l.inverted()) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return std::string(1, c);
  }
  return (l.inverted() ? "X" : "x") + std::to_string(l.generator());
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Letter> letters) : Word(free_reduce(rank, letters)) {}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(int rank, std::vector<Letter> reduced, Trusted)
    : rank_(rank), letters_(std::move(reduced)) {}

Word Word::generator(int rank, int index, bool inverted) {
  const Letter l(index, inverted);
  return Word(rank, {l});
}

Word free_reduce(int rank, std::span<const Letter> letters) {
  check_rank(rank);
  check_letters(rank, letters);
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter l : letters) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(rank, std::move(stack), Word::Trusted{});
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(rank_, std::move(out), Trusted{});
}

Word& Word::operator*=(const Word& rhs) {
  if (rhs.rank_ != rank_) throw DomainError("rank mismatch in word product");
  std::size_t i = 0;
  while (i < rhs.letters_.size() && !letters_.empty() &&
         letters_.back() == rhs.letters_[i].inverse()) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  rhs.letters_.end());
  return *this;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out *= rhs;
  return out;
}

Word Word::power(long exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  const long n = exponent < 0 ? -exponent : exponent;
  Word out(rank_);
  // Repeated multiplication keeps the cancellation exact for non-cyclically
  // reduced bases.
  for (long i = 0; i < n; ++i) out *= base;
  return out;
}

Word Word::conjugated_by(const Word& g) const { return g * *this * g.inverse(); }

Word Word::subword(std::size_t pos, std::size_t count) const {
  pos = std::min(pos, letters_.size());
  count = std::min(count, letters_.size() - pos);
  std::vector<Letter> piece(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                            letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  return Word(rank_, std::move(piece), Trusted{});
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

std::vector<long> Word::exponent_sums() const {
  std::vector<long> sums(static_cast<std::size_t>(rank_), 0);
  for (const Letter l : letters_) sums[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  return sums;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  const bool tokens = rank_ > static_cast<int>(kCompactAlphabet.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (tokens && i > 0) out += ' ';
    out += letter_name(letters_[i], rank_);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Letter> letters;
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1") return Word(rank);

  const bool token_form =
      std::any_of(trimmed.begin(), trimmed.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  std::size_t i = 0;
  while (i < trimmed.size()) {
    const char c = trimmed[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (token_form) {
      if (c != 'x' && c != 'X') throw DomainError(std::string("unknown token at '") + c + "'");
      std::size_t j = i + 1;
      int index = 0;
      while (j < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[j]))) {
        index = index * 10 + (trimmed[j] - '0');
        if (index > 1'000'000) throw DomainError("generator index too large");
        ++j;
      }
      if (j == i + 1) throw DomainError(std::string("token '") + c + "' has no index");
      if (index < 1 || index > rank) {
        throw DomainError("generator index " + std::to_string(index) + " exceeds rank " +
                          std::to_string(rank));
      }
      letters.emplace_back(index, c == 'X');
      i = j;
    } else {
      const int index = compact_index(c);
      if (index == 0) throw DomainError(std::string("unknown letter '") + c + "'");
      if (index > rank) {
        throw DomainError(std::string("letter '") + c + "' is generator " +
                          std::to_string(index) + ", exceeding rank " + std::to_string(rank));
      }
      letters.emplace_back(index, std::isupper(static_cast<unsigned char>(c)) != 0);
      ++i;
    }
  }
  return free_reduce(rank, letters);
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  const auto letters = w.letters();
  std::size_t peel = 0;
  const std::size_t n = letters.size();
  while (2 * peel + 1 < n && letters[peel] == letters[n - 1 - peel].inverse()) ++peel;
  return {w.subword(0, peel), w.subword(peel, n - 2 * peel)};
}

std::size_t cyclic_length(const Word& w) { return cyclic_reduce(w).core.length(); }

namespace {

// Largest k >= 0 such that w begins with p^k, ends with s^k (s = p^-1 read as
// a word) and 2k|p| <= |w|.
long max_extraction(const Word& w, const Word& p) {
  const auto wl = w.letters();
  const auto pl = p.letters();
  const std::size_t n = pl.size();
  const std::size_t len = wl.size();
  long k = 0;
  while (2 * (static_cast<std::size_t>(k) + 1) * n <= len) {
    const std::size_t start = static_cast<std::size_t>(k) * n;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      // prefix block k reads p; suffix block k (counted from the right) reads p^-1
      ok = wl[start + i] == pl[i] && wl[len - 1 - start - i] == pl[i].inverse();
    }
    if (!ok) break;
    ++k;
  }
  return k;
}

}  // namespace

BReducedDecomposition b_reduced_decomposition(const Word& w, const Word& b) {
  if (b.rank() != w.rank()) throw DomainError("rank mismatch between w and b");
  if (b.empty()) throw DomainError("b must be nonempty");
  if (!b.is_cyclically_reduced()) throw DomainError("b must be cyclically reduced");
  if (w.empty()) return {0, w, b};
  const std::size_t n = b.length();
  long k = max_extraction(w, b);
  if (k == 0) k = -max_extraction(w, b.inverse());
  const std::size_t strip = static_cast<std::size_t>(k < 0 ? -k : k) * n;
  return {k, w.subword(strip, w.length() - 2 * strip), b};
}

long b_index(const Word& w, const Word& b) { return b_reduced_decomposition(w, b).k; }

Word random_word(std::size_t length, int rank, std::mt19937_64& rng) {
  check_rank(rank);
  std::vector<Letter> letters;
  letters.reserve(length);
  const int vertices = 2 * rank;
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      std::uniform_int_distribution<int> pick(0, vertices - 1);
      letters.push_back(Letter::from_vertex(pick(rng)));
    } else {
      // Skip the inverse of the previous letter.
      std::uniform_int_distribution<int> pick(0, vertices - 2);
      int v = pick(rng);
      const int forbidden = letters.back().inverse().vertex();
      if (v >= forbidden) ++v;
      letters.push_back(Letter::from_vertex(v));
    }
  }
  return Word(rank, letters);
}

Word random_word(std::size_t length, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(length, rank, rng);
}

}  // namespace ffg
