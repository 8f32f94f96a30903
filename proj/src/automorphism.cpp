#include "ffg/automorphism.hpp"

#include <algorithm>

#include "ffg/error.hpp"

namespace ffg {

Automorphism::Automorphism(std::vector<Word> images) : images_(std::move(images)) {
  check_rank(static_cast<int>(images_.size()));
  for (const Word& w : images_) {
    if (w.rank() != rank()) throw DomainError("image rank does not match automorphism rank");
  }
}

Automorphism Automorphism::identity(int rank) {
  check_rank(rank);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return Automorphism(std::move(images));
}

Automorphism Automorphism::inner(const Word& g) {
  std::vector<Word> images;
  for (int i = 1; i <= g.rank(); ++i) images.push_back(Word::generator(g.rank(), i).conjugated_by(g));
  return Automorphism(std::move(images));
}

Word Automorphism::operator()(const Word& w) const {
  if (w.rank() != rank()) throw DomainError("rank mismatch applying automorphism");
  Word out(rank());
  for (const Letter l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(l.generator() - 1)];
    out *= l.inverted() ? img.inverse() : img;
  }
  return out;
}

Automorphism Automorphism::then(const Automorphism& next) const {
  if (next.rank() != rank()) throw DomainError("rank mismatch composing automorphisms");
  std::vector<Word> images;
  images.reserve(images_.size());
  for (const Word& img : images_) images.push_back(next(img));
  return Automorphism(std::move(images));
}

WhAutomorphism WhAutomorphism::multiplier(int rank, Letter a, std::span<const Letter> set) {
  check_rank(rank);
  if (a.generator() > rank) throw DomainError("multiplier outside rank");
  WhAutomorphism out(rank, Kind::Multiplier);
  out.multiplier_ = a;
  out.in_set_.assign(static_cast<std::size_t>(2 * rank), false);
  for (const Letter l : set) {
    if (l.generator() > rank) throw DomainError("multiplier set letter outside rank");
    out.in_set_[static_cast<std::size_t>(l.vertex())] = true;
  }
  if (!out.in_set(a)) throw DomainError("multiplier set must contain the multiplier");
  if (out.in_set(a.inverse())) throw DomainError("multiplier set must not contain its inverse");
  return out;
}

WhAutomorphism WhAutomorphism::signed_permutation(int rank, std::vector<Letter> images) {
  check_rank(rank);
  if (static_cast<int>(images.size()) != rank) throw DomainError("permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  for (const Letter l : images) {
    if (l.generator() < 1 || l.generator() > rank || seen[static_cast<std::size_t>(l.generator() - 1)])
      throw DomainError("signed permutation is not a bijection");
    seen[static_cast<std::size_t>(l.generator() - 1)] = true;
  }
  WhAutomorphism out(rank, Kind::PermutationInversion);
  out.permutation_ = std::move(images);
  return out;
}

Word WhAutomorphism::image(int generator) const {
  if (kind_ == Kind::PermutationInversion) {
    return Word(rank_, {permutation_[static_cast<std::size_t>(generator - 1)]});
  }
  const Letter v(generator, false);
  if (v.generator() == multiplier_.generator()) return Word(rank_, {v});
  std::vector<Letter> out;
  if (in_set(v)) out.push_back(multiplier_);
  out.push_back(v);
  if (in_set(v.inverse())) out.push_back(multiplier_.inverse());
  return Word(rank_, out);
}

Word WhAutomorphism::operator()(const Word& w) const {
  if (w.rank() != rank_) throw DomainError("rank mismatch applying Whitehead automorphism");
  std::vector<Letter> buf;
  buf.reserve(w.length() * 3);
  if (kind_ == Kind::PermutationInversion) {
    for (const Letter l : w.letters()) {
      const Letter img = permutation_[static_cast<std::size_t>(l.generator() - 1)];
      buf.push_back(l.inverted() ? img.inverse() : img);
    }
    return Word(rank_, buf);
  }
  for (const Letter l : w.letters()) {
    if (l.generator() == multiplier_.generator()) {
      buf.push_back(l);
      continue;
    }
    // The image of l (possibly inverted) is (l in Z ? a : 1) l (l^-1 in Z ? a^-1 : 1).
    if (in_set(l)) buf.push_back(multiplier_);
    buf.push_back(l);
    if (in_set(l.inverse())) buf.push_back(multiplier_.inverse());
  }
  return free_reduce(rank_, buf);
}

WhAutomorphism WhAutomorphism::inverse() const {
  if (kind_ == Kind::PermutationInversion) {
    std::vector<Letter> inv(permutation_.size());
    for (std::size_t i = 0; i < permutation_.size(); ++i) {
      const Letter img = permutation_[i];
      inv[static_cast<std::size_t>(img.generator() - 1)] =
          Letter(static_cast<int>(i) + 1, img.inverted());
    }
    return signed_permutation(rank_, std::move(inv));
  }
  WhAutomorphism out = *this;
  out.multiplier_ = multiplier_.inverse();
  out.in_set_[static_cast<std::size_t>(multiplier_.vertex())] = false;
  out.in_set_[static_cast<std::size_t>(multiplier_.inverse().vertex())] = true;
  return out;
}

Automorphism WhAutomorphism::as_automorphism() const {
  std::vector<Word> images;
  for (int i = 1; i <= rank_; ++i) images.push_back(image(i));
  return Automorphism(std::move(images));
}

std::string WhAutomorphism::describe() const {
  std::string out;
  if (kind_ == Kind::PermutationInversion) {
    out = "perm";
    for (int i = 1; i <= rank_; ++i) {
      out += ' ' + letter_name(Letter(i, false), rank_) + "->" +
             letter_name(permutation_[static_cast<std::size_t>(i - 1)], rank_);
    }
    return out;
  }
  out = "a=" + letter_name(multiplier_, rank_) + " Z={";
  bool first = true;
  for (int v = 0; v < 2 * rank_; ++v) {
    if (!in_set_[static_cast<std::size_t>(v)]) continue;
    if (!first) out += ',';
    out += letter_name(Letter::from_vertex(v), rank_);
    first = false;
  }
  return out + "}";
}

Word apply_chain(std::span<const WhAutomorphism> chain, const Word& w) {
  Word out = w;
  for (const WhAutomorphism& g : chain) out = g(out);
  return out;
}

Automorphism chain_automorphism(int rank, std::span<const WhAutomorphism> chain) {
  Automorphism out = Automorphism::identity(rank);
  for (const WhAutomorphism& g : chain) out = out.then(g.as_automorphism());
  return out;
}

WhChain inverse_chain(std::span<const WhAutomorphism> chain) {
  WhChain out;
  out.reserve(chain.size());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(it->inverse());
  return out;
}

}  // namespace ffg
