#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "horobound/limits.hpp"
#include "horobound/oracle.hpp"

namespace horobound {

using BigCount = boost::multiprecision::cpp_int;

/// Exact BFS distances from `source` out to `radius`. Vertices at distance
/// exactly `radius` are present but not expanded.
struct DistanceField {
  VertexRef source;
  int radius = 0;
  std::unordered_map<std::string, int> dist;
  std::vector<VertexRef> order;  // BFS order; each layer sorted by key
  bool frontier_complete = false;  // no vertex beyond the field exists

  std::optional<int> at(const VertexRef& v) const;
  bool contains(const VertexRef& v) const { return dist.contains(v.key); }
  std::size_t size() const { return order.size(); }
  /// Vertices at exactly distance r, sorted by key.
  std::vector<VertexRef> sphere(int r) const;
};

/// Predecessor DAG of all geodesics from the field's source.
struct GeodesicDAG {
  DistanceField field;
  std::unordered_map<std::string, std::vector<VertexRef>> predecessors;
  std::unordered_map<std::string, BigCount> geodesic_counts;
};

DistanceField bfs(const NeighborOracle& oracle, const VertexRef& source, int radius,
                  const Limits& limits = {});

GeodesicDAG geodesic_dag(const NeighborOracle& oracle, DistanceField field);

/// Exact d(x, y) if it is at most `cap`, otherwise nullopt.
std::optional<int> distance(const NeighborOracle& oracle, const VertexRef& x, const VertexRef& y,
                            int cap, const Limits& limits = {});

/// Like distance() but throws CapExceeded instead of returning nullopt.
int distance_within(const NeighborOracle& oracle, const VertexRef& x, const VertexRef& y, int cap,
                    const Limits& limits = {});

/// {v : d(a,v) + d(v,c) = d(a,c)}, sorted by key.
std::vector<VertexRef> geodesic_vertices(const NeighborOracle& oracle, const VertexRef& a,
                                         const VertexRef& c, int cap, const Limits& limits = {});

BigCount count_geodesics(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& c,
                         int cap, const Limits& limits = {});

struct GeodesicEnumeration {
  std::vector<std::vector<VertexRef>> paths;  // lexicographic by key sequence
  bool truncated = false;
};

GeodesicEnumeration enumerate_geodesics(const NeighborOracle& oracle, const VertexRef& a,
                                        const VertexRef& c, int cap, std::size_t limit,
                                        const Limits& limits = {});

/// Some minimal path a->c and some minimal path b->c end in a common segment
/// of at least one edge: there is z != c on geodesics from both a and b to c.
bool shares_tail(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b,
                 const VertexRef& c, int cap, const Limits& limits = {});

/// From each vertex, no two minimal paths to the other two meet again.
bool is_rigid_triple(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b,
                     const VertexRef& c, int cap, const Limits& limits = {});

class Triple {
 public:
  /// Throws InvalidInput on repeated vertices or inconsistent distances.
  Triple(VertexRef a, VertexRef b, VertexRef c, int dab, int dbc, int dca);

  const VertexRef& a() const { return a_; }
  const VertexRef& b() const { return b_; }
  const VertexRef& c() const { return c_; }
  int dab() const { return dab_; }
  int dbc() const { return dbc_; }
  int dca() const { return dca_; }
  int perimeter() const { return dab_ + dbc_ + dca_; }
  int min_side() const;

 private:
  VertexRef a_, b_, c_;
  int dab_, dbc_, dca_;
};

Triple make_triple(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b,
                   const VertexRef& c, int cap, const Limits& limits = {});

struct PathCheck {
  bool geodesic = false;
  bool adjacent = true;  // false when the path precondition was violated
  // First offending index pair (i, j) when !geodesic.
  std::size_t first = 0;
  std::size_t second = 0;
  std::string reason;
};

/// d(path[i], path[j]) == |i - j| for all i, j, checked by BFS.
PathCheck is_geodesic_path(const NeighborOracle& oracle, std::span<const VertexRef> path,
                           const Limits& limits = {});

/// Symmetry/self-loop/duplicate audit of every vertex in the ball.
/// Returns a description of the first violation, or empty.
std::string audit_oracle(const NeighborOracle& oracle, const VertexRef& center, int radius,
                         const Limits& limits = {});

}  // namespace horobound
