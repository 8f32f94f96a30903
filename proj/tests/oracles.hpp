#pragma once

// Deliberately naive reference implementations used as test oracles.

#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "ffg/word.hpp"

namespace oracle {

// Deletes the leftmost cancelling pair until none is left.
inline std::vector<int> naive_reduce(std::vector<int> codes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
      if (codes[i] == -codes[i + 1]) {
        codes.erase(codes.begin() + static_cast<long>(i), codes.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return codes;
}

inline std::vector<int> codes_of(const ffg::Word& w) {
  std::vector<int> out;
  for (const auto l : w.letters()) out.push_back(l.code());
  return out;
}

inline ffg::Word word_of(int rank, const std::vector<int>& codes) {
  std::vector<ffg::Letter> letters;
  for (const int c : codes) letters.push_back(ffg::Letter::from_code(c));
  return ffg::Word(rank, letters);
}

// Largest k >= 0 for which c = b^-k w b^k satisfies |w| = 2k|b| + |c|, so
// that b^k . c . b^-k is a reduced concatenation. Every k is tried.
inline long literal_extraction(const ffg::Word& w, const ffg::Word& b) {
  long best = 0;
  for (long k = 1; static_cast<std::size_t>(2 * k) * b.length() <= w.length(); ++k) {
    const ffg::Word bk = b.power(k);
    const ffg::Word core = bk.inverse() * w * bk;
    if (core.length() + 2 * bk.length() == w.length()) best = k;
  }
  return best;
}

inline long brute_b_index(const ffg::Word& w, const ffg::Word& b) {
  const long pos = literal_extraction(w, b);
  if (pos > 0) return pos;
  return -literal_extraction(w, b.inverse());
}

// Slopes +-(p, q) with |p|, |q| <= bound, one per sign class, and all-pairs
// Farey distances by breadth-first search on the determinant +-1 graph
// restricted to the box. Geodesics between two slopes of the box never leave
// it, since every edge they cross separates one endpoint from 1/0 and one from 0/1.
struct FareyBox {
  std::vector<std::pair<long, long>> slopes;
  std::vector<std::vector<int>> dist;
};

inline FareyBox farey_bfs(long bound) {
  FareyBox box;
  for (long q = 0; q <= bound; ++q) {
    for (long p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (q == 0 && p != 1) continue;
      box.slopes.emplace_back(p, q);
    }
  }
  const std::size_t n = box.slopes.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long det = box.slopes[i].first * box.slopes[j].second -
                       box.slopes[i].second * box.slopes[j].first;
      if (det == 1 || det == -1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  }
  box.dist.assign(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& d = box.dist[s];
    std::queue<int> todo;
    d[s] = 0;
    todo.push(static_cast<int>(s));
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (const int w : adj[static_cast<std::size_t>(v)]) {
        if (d[static_cast<std::size_t>(w)] >= 0) continue;
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
        todo.push(w);
      }
    }
  }
  return box;
}

}  // namespace oracle
