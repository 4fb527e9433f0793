#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "horobound/limits.hpp"
#include "horobound/oracle.hpp"

namespace horobound {

/// All pairwise graph distances within a ball B(center, radius), plus the
/// in-ball adjacency. Distances are true graph distances (paths may leave
/// the ball). Vertex indices follow key order.
struct LocalMetric {
  VertexRef center;
  int radius = 0;
  std::vector<VertexRef> vertices;
  std::vector<int> depth;  // d(center, v)
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> neighbors;  // in-ball neighbors only
  std::vector<std::uint16_t> dist;                    // row-major

  std::size_t size() const { return vertices.size(); }
  int d(std::size_t i, std::size_t j) const { return dist[i * vertices.size() + j]; }
  std::uint32_t at(const VertexRef& v) const;
  /// Indices with depth <= r, in key order.
  std::vector<std::uint32_t> ball(int r) const;
  /// Every neighbor of i lies in the ball (true when depth(i) < radius).
  bool closed(std::size_t i) const { return depth[i] < radius; }

  // Local forms of the graph-core predicates. They need closed() on the
  // vertex whose neighbors are probed (c, respectively all three).
  bool shares_tail(std::size_t a, std::size_t b, std::size_t c) const;
  bool is_rigid(std::size_t a, std::size_t b, std::size_t c) const;
};

/// Builds the local metric. Cayley graphs use one BFS from the identity and
/// d(g,h) = |g^-1 h|; other graphs run one BFS per ball vertex.
LocalMetric build_local_metric(const NeighborOracle& oracle, const VertexRef& center, int radius,
                               const Limits& limits = {}, unsigned workers = 1);

/// Runs fn(begin, end) over [0, n) split into contiguous chunks on up to
/// `workers` threads. Exceptions are rethrown on the calling thread.
void parallel_chunks(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

}  // namespace horobound
