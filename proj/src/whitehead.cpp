#include "ffg/whitehead.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "ffg/error.hpp"

namespace ffg {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

// Components among the vertices other than `removed` (-1 keeps all).
int component_count(int vertices, const std::vector<std::pair<int, int>>& edges, int removed) {
  DisjointSets sets(vertices);
  for (const auto& [u, v] : edges) {
    if (u == removed || v == removed) continue;
    sets.unite(u, v);
  }
  int count = 0;
  for (int v = 0; v < vertices; ++v) {
    if (v != removed && sets.find(v) == v) ++count;
  }
  return count;
}

void require_nonidentity(const Word& w, const char* what) {
  if (w.empty()) throw DomainError(std::string(what) + " requires a nonidentity word");
}

}  // namespace

WhiteheadGraph::WhiteheadGraph(int rank, std::vector<std::pair<int, int>> edges)
    : rank_(rank), edges_(std::move(edges)) {
  check_rank(rank);
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
      throw DomainError("Whitehead graph edge outside vertex set");
  }
}

int WhiteheadGraph::degree(Letter v) const {
  int d = 0;
  for (const auto& [a, c] : edges_) d += (a == v.vertex()) + (c == v.vertex());
  return d;
}

int WhiteheadGraph::multiplicity(Letter u, Letter v) const {
  int m = 0;
  for (const auto& [a, c] : edges_) {
    if ((a == u.vertex() && c == v.vertex()) || (a == v.vertex() && c == u.vertex())) ++m;
  }
  return m;
}

bool WhiteheadGraph::connected() const { return component_count(vertex_count(), edges_, -1) == 1; }

bool WhiteheadGraph::connected_without(int removed) const {
  return component_count(vertex_count(), edges_, removed) <= 1;
}

WhiteheadGraph whitehead_graph(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) throw DomainError("Whitehead graph of the identity is undefined");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(core.length());
  for (std::size_t i = 0; i < core.length(); ++i) {
    const Letter u = core[i];
    const Letter next = core[(i + 1) % core.length()];
    edges.emplace_back(u.vertex(), next.inverse().vertex());
  }
  return WhiteheadGraph(w.rank(), std::move(edges));
}

std::optional<Letter> find_cut_vertex(const WhiteheadGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.connected_without(v)) return Letter::from_vertex(v);
  }
  return std::nullopt;
}

const std::vector<WhAutomorphism>& whitehead_moves(int rank) {
  check_rank(rank);
  static std::mutex mutex;
  static std::map<int, std::vector<WhAutomorphism>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  std::vector<WhAutomorphism> moves;
  const int vertices = 2 * rank;
  for (int av = 0; av < vertices; ++av) {
    const Letter a = Letter::from_vertex(av);
    std::vector<Letter> free_letters;
    for (int v = 0; v < vertices; ++v) {
      if (v != a.vertex() && v != a.inverse().vertex()) free_letters.push_back(Letter::from_vertex(v));
    }
    const unsigned long full = (1UL << free_letters.size()) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
      std::vector<Letter> set{a};
      for (std::size_t i = 0; i < free_letters.size(); ++i) {
        if (mask & (1UL << i)) set.push_back(free_letters[i]);
      }
      moves.push_back(WhAutomorphism::multiplier(rank, a, set));
    }
  }
  return cache.emplace(rank, std::move(moves)).first->second;
}

std::vector<WhAutomorphism> elementary_permutations(int rank) {
  check_rank(rank);
  std::vector<WhAutomorphism> out;
  std::vector<Letter> identity;
  for (int i = 1; i <= rank; ++i) identity.emplace_back(i, false);
  for (int i = 0; i < rank; ++i) {
    auto images = identity;
    images[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(i)].inverse();
    out.push_back(WhAutomorphism::signed_permutation(rank, images));
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      auto images = identity;
      std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      out.push_back(WhAutomorphism::signed_permutation(rank, images));
    }
  }
  return out;
}

MinimizationCertificate minimize_cyclic_length(const Word& w) {
  require_nonidentity(w, "minimize_cyclic_length");
  const auto& moves = whitehead_moves(w.rank());
  MinimizationCertificate cert{w, w, cyclic_reduce(w).core, {}, {}};
  cert.length_trace.push_back(cert.minimized.length());
  while (cert.minimized.length() > 1) {
    const WhAutomorphism* best = nullptr;
    std::size_t best_length = cert.minimized.length();
    for (const WhAutomorphism& g : moves) {
      const std::size_t len = cyclic_length(g(cert.minimized));
      if (len < best_length) {
        best_length = len;
        best = &g;
      }
    }
    if (best == nullptr) break;
    cert.chain.push_back(*best);
    cert.image = (*best)(cert.image);
    cert.minimized = cyclic_reduce(cert.image).core;
    cert.length_trace.push_back(cert.minimized.length());
  }
  return cert;
}

bool is_primitive(const Word& w) { return minimize_cyclic_length(w).minimized.length() == 1; }

std::string to_string(WordClass c) {
  switch (c) {
    case WordClass::Primitive: return "Primitive";
    case WordClass::SimpleNonPrimitive: return "SimpleNonPrimitive";
    case WordClass::Filling: return "Filling";
  }
  return "?";
}

Classification classify_with_certificate(const Word& w) {
  require_nonidentity(w, "classify");
  MinimizationCertificate cert = minimize_cyclic_length(w);
  if (cert.minimized.length() == 1) return {WordClass::Primitive, std::move(cert), std::nullopt};
  const auto cut = find_cut_vertex(whitehead_graph(cert.minimized));
  // A minimal word with a cut vertex lies in a proper free factor; a word with
  // no cut vertex in some basis cannot.
  const WordClass verdict = cut ? WordClass::SimpleNonPrimitive : WordClass::Filling;
  return {verdict, std::move(cert), cut};
}

WordClass classify(const Word& w) { return classify_with_certificate(w).verdict; }

MinimizingBasis minimizing_basis(const Word& w) {
  MinimizationCertificate cert = minimize_cyclic_length(w);
  return {std::move(cert.chain), std::move(cert.minimized)};
}

MinimalFillingWord MinimalFillingWord::verify(const Word& b) {
  if (b.empty()) throw DomainError("b must be nonempty");
  if (!b.is_cyclically_reduced()) throw DomainError("b must be cyclically reduced");
  const Classification c = classify_with_certificate(b);
  if (c.verdict != WordClass::Filling) {
    throw DomainError("b = " + b.str() + " is not filling (" + to_string(c.verdict) + ")");
  }
  if (c.certificate.minimized.length() != b.length()) {
    throw DomainError("b = " + b.str() + " is not written in a minimizing basis (minimal length " +
                      std::to_string(c.certificate.minimized.length()) + ")");
  }
  return MinimalFillingWord(b);
}

Word surface_boundary_word(int rank) {
  check_rank(rank);
  std::vector<Letter> letters;
  if (rank % 2 == 0) {
    for (int i = 1; i < rank; i += 2) {
      letters.insert(letters.end(),
                     {Letter(i, false), Letter(i + 1, false), Letter(i, true), Letter(i + 1, true)});
    }
  } else {
    for (int i = 1; i <= rank; ++i) letters.insert(letters.end(), {Letter(i, false), Letter(i, false)});
  }
  return Word(rank, letters);
}

}  // namespace ffg
