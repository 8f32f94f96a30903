#include "ffg/core_graph.hpp"

#include <deque>
#include <sstream>

#include "ffg/error.hpp"

namespace ffg {

namespace {

// Mutable graph used while folding. Slots hold raw vertex ids which are
// resolved through the union-find on read.
class Folder {
 public:
  explicit Folder(int rank) : slots_per_vertex_(static_cast<std::size_t>(2 * rank)) {
    new_vertex();
  }

  int new_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    slots_.emplace_back(slots_per_vertex_, -1);
    return parent_.back();
  }

  int find(int v) {
    while (parent_[idx(v)] != v) {
      parent_[idx(v)] = parent_[idx(parent_[idx(v)])];
      v = parent_[idx(v)];
    }
    return v;
  }

  void add_path(const Word& w) {
    if (w.empty()) return;
    int at = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      const int to = (i + 1 == w.length()) ? 0 : new_vertex();
      add_edge(at, w[i], to);
      at = to;
    }
    drain();
  }

  bool alive(int v) const { return parent_[idx(v)] == v && alive_[idx(v)]; }

  // Removes non-basepoint vertices of degree < 2 until none remain.
  void trim() {
    alive_.assign(parent_.size(), true);
    std::deque<int> queue;
    for (int v = 1; v < static_cast<int>(parent_.size()); ++v) {
      if (parent_[idx(v)] == v) queue.push_back(v);
    }
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (!alive(v) || degree(v) >= 2) continue;
      alive_[idx(v)] = false;
      for (std::size_t s = 0; s < slots_per_vertex_; ++s) {
        const int raw = slots_[idx(v)][s];
        if (raw < 0) continue;
        const int t = find(raw);
        slots_[idx(v)][s] = -1;
        slots_[idx(t)][s ^ 1U] = -1;
        if (t != 0) queue.push_back(t);
      }
    }
  }

  int degree(int v) {
    int d = 0;
    for (const int raw : slots_[idx(v)]) d += raw >= 0;
    return d;
  }

  int slot(int v, std::size_t s) {
    const int raw = slots_[idx(v)][s];
    return raw < 0 ? -1 : find(raw);
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  void add_edge(int u, Letter l, int v) {
    u = find(u);
    v = find(v);
    const auto fwd = static_cast<std::size_t>(l.vertex());
    const auto bwd = static_cast<std::size_t>(l.inverse().vertex());
    const int existing = slots_[idx(u)][fwd];
    if (existing >= 0 && find(existing) != v) {
      pending_.emplace_back(find(existing), v);
    } else {
      slots_[idx(u)][fwd] = v;
    }
    const int reverse = slots_[idx(v)][bwd];
    if (reverse >= 0 && find(reverse) != u) {
      pending_.emplace_back(find(reverse), u);
    } else {
      slots_[idx(v)][bwd] = u;
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      // Keep the basepoint as a representative.
      if (b == 0) std::swap(a, b);
      parent_[idx(b)] = a;
      for (std::size_t s = 0; s < slots_per_vertex_; ++s) {
        const int raw = slots_[idx(b)][s];
        if (raw < 0) continue;
        slots_[idx(b)][s] = -1;
        add_edge(a, Letter::from_vertex(static_cast<int>(s)), raw);
      }
    }
  }

  std::size_t slots_per_vertex_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> slots_;
  std::vector<bool> alive_;
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

CoreGraph CoreGraph::fold(int rank, std::span<const Word> generators) {
  check_rank(rank);
  Folder folder(rank);
  for (const Word& g : generators) {
    if (g.rank() != rank) throw DomainError("generator rank mismatch");
    folder.add_path(g);
  }
  folder.trim();

  // Canonical breadth-first numbering from the basepoint.
  const std::size_t slots = static_cast<std::size_t>(2 * rank);
  std::vector<int> order{0};
  std::vector<int> number_of(1, -1);
  auto number = [&](int v) -> int& {
    if (number_of.size() <= static_cast<std::size_t>(v)) number_of.resize(static_cast<std::size_t>(v) + 1, -1);
    return number_of[static_cast<std::size_t>(v)];
  };
  number(0) = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (std::size_t s = 0; s < slots; ++s) {
      const int t = folder.slot(v, s);
      if (t < 0 || number(t) >= 0) continue;
      number(t) = static_cast<int>(order.size());
      order.push_back(t);
    }
  }
  std::vector<std::vector<int>> targets(order.size(), std::vector<int>(slots, -1));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t s = 0; s < slots; ++s) {
      const int t = folder.slot(order[i], s);
      targets[i][s] = t < 0 ? -1 : number(t);
    }
  }
  return CoreGraph(rank, std::move(targets));
}

std::size_t CoreGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : targets_) {
    for (std::size_t s = 0; s < row.size(); s += 2) e += row[s] >= 0;
  }
  return e;
}

long CoreGraph::subgroup_rank() const {
  return static_cast<long>(edge_count()) - static_cast<long>(vertex_count()) + 1;
}

int CoreGraph::degree(int vertex) const {
  int d = 0;
  for (const int t : targets_[static_cast<std::size_t>(vertex)]) d += t >= 0;
  return d;
}

std::vector<bool> CoreGraph::cyclic_core() const {
  const std::size_t n = vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  std::deque<int> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = degree(static_cast<int>(v));
    if (deg[v] < 2) queue.push_back(static_cast<int>(v));
  }
  while (!queue.empty()) {
    const auto v = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (const int t : targets_[v]) {
      if (t < 0) continue;
      const auto ti = static_cast<std::size_t>(t);
      if (alive[ti] && --deg[ti] < 2) queue.push_back(t);
    }
  }
  return alive;
}

bool CoreGraph::contains(const Word& w) const {
  if (w.rank() != rank_) throw DomainError("rank mismatch in membership test");
  int at = 0;
  for (const Letter l : w.letters()) {
    at = target(at, l);
    if (at < 0) return false;
  }
  return at == 0;
}

bool CoreGraph::is_covering() const {
  for (const auto& row : targets_) {
    for (const int t : row) {
      if (t < 0) return false;
    }
  }
  return true;
}

std::vector<Word> CoreGraph::basis() const {
  const std::size_t slots = static_cast<std::size_t>(2 * rank_);
  const std::size_t n = vertex_count();
  std::vector<Word> path_to(n, Word(rank_));
  // Spanning tree: each non-basepoint vertex records the vertex and slot of
  // the edge that discovered it.
  std::vector<int> parent(n, -1);
  std::vector<int> parent_slot(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto v = static_cast<std::size_t>(order[head]);
    for (std::size_t s = 0; s < slots; ++s) {
      const int t = targets_[v][s];
      if (t < 0 || seen[static_cast<std::size_t>(t)]) continue;
      const auto ti = static_cast<std::size_t>(t);
      seen[ti] = true;
      parent[ti] = static_cast<int>(v);
      parent_slot[ti] = static_cast<int>(s);
      path_to[ti] = path_to[v] * Word(rank_, {Letter::from_vertex(static_cast<int>(s))});
      order.push_back(t);
    }
  }
  std::vector<Word> out;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < slots; s += 2) {
      const int t = targets_[v][s];
      if (t < 0) continue;
      const auto ti = static_cast<std::size_t>(t);
      const bool tree_edge =
          (parent[ti] == static_cast<int>(v) && parent_slot[ti] == static_cast<int>(s)) ||
          (parent[v] == t && parent_slot[v] == static_cast<int>(s ^ 1U));
      if (tree_edge) continue;
      out.push_back(path_to[v] * Word(rank_, {Letter::from_vertex(static_cast<int>(s))}) *
                    path_to[ti].inverse());
    }
  }
  return out;
}

bool CoreGraph::contains_subgroup(const CoreGraph& h) const {
  if (h.rank_ != rank_) throw DomainError("rank mismatch in containment test");
  for (const Word& g : h.basis()) {
    if (!contains(g)) return false;
  }
  return true;
}

std::string CoreGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph core {\n  0 [shape=doublecircle];\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t s = 0; s < targets_[v].size(); s += 2) {
      const int t = targets_[v][s];
      if (t < 0) continue;
      out << "  " << v << " -> " << t << " [label=\""
          << letter_name(Letter::from_vertex(static_cast<int>(s)), rank_) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

bool is_basis_pair(const Word& u, const Word& v) {
  if (u.rank() != 2 || v.rank() != 2) throw DomainError("is_basis_pair is defined for F_2 only");
  const Word gens[] = {u, v};
  return CoreGraph::fold(2, gens).is_whole_group();
}

}  // namespace ffg
