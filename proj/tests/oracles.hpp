// Brute-force reference implementations. They only use NeighborOracle::neighbors
// (the graph definition) and never call the library's metric code.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "horobound/oracle.hpp"

namespace oracle {

using horobound::NeighborOracle;
using horobound::VertexRef;

struct Graph {
  std::vector<VertexRef> v;
  std::unordered_map<std::string, int> id;
  std::vector<std::vector<int>> adj;  // edges inside the explored ball
  std::vector<int> depth;

  int at(const VertexRef& x) const { return id.at(x.key); }
};

// Every vertex within `radius` of `center`, found with a plain queue.
// Distances between points of B(r) are exact once radius >= 2r.
inline Graph explore(const NeighborOracle& g, const VertexRef& center, int radius) {
  Graph out;
  std::deque<int> queue;
  out.v.push_back(center);
  out.id[center.key] = 0;
  out.depth.push_back(0);
  queue.push_back(0);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (out.depth[x] == radius) continue;
    for (const auto& u : g.neighbors(out.v[x])) {
      if (out.id.count(u.key)) continue;
      out.id[u.key] = static_cast<int>(out.v.size());
      out.v.push_back(u);
      out.depth.push_back(out.depth[x] + 1);
      queue.push_back(static_cast<int>(out.v.size()) - 1);
    }
  }
  out.adj.resize(out.v.size());
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    for (const auto& u : g.neighbors(out.v[i])) {
      auto it = out.id.find(u.key);
      if (it != out.id.end()) out.adj[i].push_back(it->second);
    }
  }
  return out;
}

inline std::vector<int> distances(const Graph& g, int s) {
  std::vector<int> d(g.v.size(), -1);
  std::deque<int> q{s};
  d[s] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : g.adj[x]) {
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

// All shortest paths s -> t by depth-first search over walks of length d(s,t).
inline std::vector<std::vector<int>> shortest_paths(const Graph& g, int s, int t) {
  auto to_t = distances(g, t);
  std::vector<std::vector<int>> out;
  if (to_t[s] < 0) return out;
  std::vector<int> path{s};
  auto rec = [&](auto&& self, int x) -> void {
    if (x == t) {
      out.push_back(path);
      return;
    }
    for (int y : g.adj[x]) {
      if (to_t[y] != to_t[x] - 1) continue;
      path.push_back(y);
      self(self, y);
      path.pop_back();
    }
  };
  rec(rec, s);
  return out;
}

// Some path [a,c] and some path [b,c] end in a common final edge.
inline bool shares_tail(const Graph& g, int a, int b, int c) {
  std::set<int> last_a, last_b;
  for (const auto& p : shortest_paths(g, a, c)) {
    if (p.size() >= 2) last_a.insert(p[p.size() - 2]);
  }
  for (const auto& p : shortest_paths(g, b, c)) {
    if (p.size() >= 2) last_b.insert(p[p.size() - 2]);
  }
  for (int x : last_a) {
    if (last_b.count(x)) return true;
  }
  return false;
}

// From each vertex, no two minimal paths to the other two meet again.
inline bool rigid(const Graph& g, int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  for (int i = 0; i < 3; ++i) {
    int x = t[i], y = t[(i + 1) % 3], z = t[(i + 2) % 3];
    std::set<int> on_y;
    for (const auto& p : shortest_paths(g, x, y)) on_y.insert(p.begin() + 1, p.end());
    for (const auto& p : shortest_paths(g, x, z)) {
      for (std::size_t k = 1; k < p.size(); ++k) {
        if (on_y.count(p[k])) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- integer matrices

using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat mat_mul(const Mat& x, const Mat& y) {
  std::size_t n = x.size();
  Mat z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
  return z;
}

// Sphere sizes of a Cayley graph given by matrix generators, by naive word
// enumeration with deduplication of the products.
template <typename Normalize>
std::vector<std::size_t> matrix_sphere_sizes(const std::vector<Mat>& gens, int radius, Normalize norm) {
  std::size_t n = gens.front().size();
  Mat id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Mat> seen{norm(id)};
  std::vector<Mat> layer{id};
  std::vector<std::size_t> sizes{1};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Mat> next;
    for (const auto& m : layer) {
      for (const auto& s : gens) {
        auto p = mat_mul(m, s);
        if (seen.insert(norm(p)).second) next.push_back(p);
      }
    }
    sizes.push_back(next.size());
    layer = std::move(next);
  }
  return sizes;
}

// ---------------------------------------------------------------- Burau

// Laurent polynomials in t with integer coefficients.
using Poly = std::map<int, std::int64_t>;

inline Poly poly_add(const Poly& x, const Poly& y) {
  Poly z = x;
  for (auto [e, c] : y) {
    z[e] += c;
    if (z[e] == 0) z.erase(e);
  }
  return z;
}

inline Poly poly_mul(const Poly& x, const Poly& y) {
  Poly z;
  for (auto [e1, c1] : x)
    for (auto [e2, c2] : y) {
      z[e1 + e2] += c1 * c2;
      if (z[e1 + e2] == 0) z.erase(e1 + e2);
    }
  return z;
}

using PolyMat = std::vector<std::vector<Poly>>;

inline PolyMat burau_identity(int n) {
  PolyMat m(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = {{0, 1}};
  return m;
}

// Unreduced Burau image of sigma_k^{+-1} (letter +-k).
inline PolyMat burau_letter(int n, int letter) {
  auto m = burau_identity(n);
  int i = std::abs(letter) - 1;
  m[i][i].clear();
  m[i + 1][i + 1].clear();
  if (letter > 0) {
    m[i][i] = {{0, 1}, {1, -1}};
    m[i][i + 1] = {{1, 1}};
    m[i + 1][i] = {{0, 1}};
  } else {
    m[i][i + 1] = {{0, 1}};
    m[i + 1][i] = {{-1, 1}};
    m[i + 1][i + 1] = {{0, 1}, {-1, -1}};
  }
  return m;
}

inline PolyMat burau_mul(const PolyMat& x, const PolyMat& y) {
  std::size_t n = x.size();
  PolyMat z(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] = poly_add(z[i][j], poly_mul(x[i][k], y[k][j]));
  return z;
}

inline PolyMat burau(int n, const std::vector<int>& word) {
  auto m = burau_identity(n);
  for (int l : word) m = burau_mul(m, burau_letter(n, l));
  return m;
}

// Positive words equivalent to `w` under the braid relations alone (finite
// because the relations preserve length).
inline std::set<std::vector<int>> positive_class(int n, const std::vector<int>& w) {
  std::set<std::vector<int>> seen{w};
  std::deque<std::vector<int>> q{w};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    std::vector<std::vector<int>> moves;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (std::abs(x[i] - x[i + 1]) >= 2) {
        auto y = x;
        std::swap(y[i], y[i + 1]);
        moves.push_back(y);
      }
      if (i + 2 < x.size() && x[i] == x[i + 2] && std::abs(x[i] - x[i + 1]) == 1) {
        auto y = x;
        y[i] = x[i + 1];
        y[i + 1] = x[i];
        y[i + 2] = x[i + 1];
        moves.push_back(y);
      }
    }
    for (auto& y : moves) {
      if (seen.insert(y).second) q.push_back(std::move(y));
    }
  }
  (void)n;
  return seen;
}

}  // namespace oracle
