#include "horobound/metric.hpp"

#include <algorithm>
#include <unordered_set>

#include "horobound/errors.hpp"

namespace horobound {

namespace {

void sort_by_key(std::vector<VertexRef>& vs) {
  std::sort(vs.begin(), vs.end(), [](const VertexRef& x, const VertexRef& y) { return x.key < y.key; });
}

// Layered BFS; stops early once `target` has been reached.
DistanceField run_bfs(const NeighborOracle& oracle, const VertexRef& source, int radius,
                      const Limits& limits, const VertexRef* target) {
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  DistanceField field;
  field.source = source;
  field.radius = radius;
  field.dist.emplace(source.key, 0);
  field.order.push_back(source);
  if (target && *target == source) return field;

  std::vector<VertexRef> layer{source};
  for (int r = 0; r < radius; ++r) {
    std::vector<VertexRef> next;
    for (const auto& v : layer) {
      for (auto& u : oracle.neighbors(v)) {
        if (field.dist.try_emplace(u.key, r + 1).second) next.push_back(std::move(u));
      }
    }
    if (field.dist.size() > limits.max_vertices) {
      throw ResourceLimit("ball around " + source.display() + " exceeds " +
                          std::to_string(limits.max_vertices) + " vertices at radius " +
                          std::to_string(r + 1));
    }
    if (next.empty()) {
      field.frontier_complete = true;
      break;
    }
    sort_by_key(next);
    field.order.insert(field.order.end(), next.begin(), next.end());
    if (target && field.dist.contains(target->key)) break;
    layer = std::move(next);
  }
  return field;
}

void require_distinct(const VertexRef& a, const VertexRef& b, const VertexRef& c) {
  if (a == b || b == c || a == c) throw InvalidInput("triple vertices must be distinct");
}

struct Interval {
  DistanceField from_a;  // complete out to distance d
  int d = 0;
  std::unordered_set<std::string> keys;  // {v : d(a,v) + d(v,c) = d}
};

// One BFS from a that stops at c's layer, then a backward walk from c along
// strictly decreasing d(a, .), which visits exactly the geodesic interval.
Interval geodesic_interval(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& c, int cap,
                           const Limits& limits) {
  if (cap < 0) throw InvalidInput("cap must be nonnegative");
  Interval out;
  out.from_a = run_bfs(oracle, a, cap, limits, &c);
  auto d = out.from_a.at(c);
  if (!d) throw CapExceeded("d(" + a.display() + ", " + c.display() + ") exceeds cap " + std::to_string(cap));
  out.d = *d;
  out.keys.insert(c.key);
  std::vector<VertexRef> stack{c};
  while (!stack.empty()) {
    auto v = std::move(stack.back());
    stack.pop_back();
    int dv = out.from_a.dist.at(v.key);
    if (dv == 0) continue;
    for (auto& u : oracle.neighbors(v)) {
      auto it = out.from_a.dist.find(u.key);
      if (it != out.from_a.dist.end() && it->second == dv - 1 && out.keys.insert(u.key).second) {
        stack.push_back(std::move(u));
      }
    }
  }
  return out;
}

}  // namespace

std::optional<int> DistanceField::at(const VertexRef& v) const {
  auto it = dist.find(v.key);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexRef> DistanceField::sphere(int r) const {
  std::vector<VertexRef> out;
  for (const auto& v : order) {
    if (dist.at(v.key) == r) out.push_back(v);
  }
  return out;
}

DistanceField bfs(const NeighborOracle& oracle, const VertexRef& source, int radius, const Limits& limits) {
  return run_bfs(oracle, source, radius, limits, nullptr);
}

GeodesicDAG geodesic_dag(const NeighborOracle& oracle, DistanceField field) {
  GeodesicDAG dag;
  for (const auto& v : field.order) {
    int dv = field.dist.at(v.key);
    if (dv == 0) {
      dag.geodesic_counts[v.key] = 1;
      dag.predecessors[v.key] = {};
      continue;
    }
    std::vector<VertexRef> preds;
    BigCount total = 0;
    for (auto& u : oracle.neighbors(v)) {
      auto du = field.at(u);
      if (du && *du == dv - 1) {
        total += dag.geodesic_counts.at(u.key);
        preds.push_back(std::move(u));
      }
    }
    sort_by_key(preds);
    dag.predecessors[v.key] = std::move(preds);
    dag.geodesic_counts[v.key] = std::move(total);
  }
  dag.field = std::move(field);
  return dag;
}

std::optional<int> distance(const NeighborOracle& oracle, const VertexRef& x, const VertexRef& y, int cap,
                            const Limits& limits) {
  if (cap < 0) throw InvalidInput("cap must be nonnegative");
  auto field = run_bfs(oracle, x, cap, limits, &y);
  return field.at(y);
}

int distance_within(const NeighborOracle& oracle, const VertexRef& x, const VertexRef& y, int cap,
                    const Limits& limits) {
  auto d = distance(oracle, x, y, cap, limits);
  if (!d) {
    throw CapExceeded("d(" + x.display() + ", " + y.display() + ") exceeds cap " + std::to_string(cap));
  }
  return *d;
}

std::vector<VertexRef> geodesic_vertices(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& c,
                                         int cap, const Limits& limits) {
  auto iv = geodesic_interval(oracle, a, c, cap, limits);
  const auto& fa = iv.from_a;
  const auto& keys = iv.keys;
  std::vector<VertexRef> out;
  for (const auto& v : fa.order) {
    if (keys.contains(v.key)) out.push_back(v);
  }
  sort_by_key(out);
  return out;
}

BigCount count_geodesics(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& c, int cap,
                         const Limits& limits) {
  auto iv = geodesic_interval(oracle, a, c, cap, limits);
  const auto& fa = iv.from_a;
  const auto& keys = iv.keys;
  std::unordered_map<std::string, BigCount> count;
  for (const auto& v : fa.order) {  // BFS order = nondecreasing distance from a
    if (!keys.contains(v.key)) continue;
    int dv = fa.dist.at(v.key);
    if (dv == 0) {
      count[v.key] = 1;
      continue;
    }
    BigCount total = 0;
    for (const auto& u : oracle.neighbors(v)) {
      auto it = count.find(u.key);
      if (it != count.end() && fa.dist.at(u.key) == dv - 1) total += it->second;
    }
    count[v.key] = std::move(total);
  }
  return count.at(c.key);
}

GeodesicEnumeration enumerate_geodesics(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& c,
                                        int cap, std::size_t limit, const Limits& limits) {
  if (limit < 1) throw InvalidInput("enumeration limit must be at least 1");
  if (limit > limits.max_enumeration) {
    throw ResourceLimit("enumeration limit " + std::to_string(limit) + " exceeds configured maximum " +
                        std::to_string(limits.max_enumeration));
  }
  auto iv = geodesic_interval(oracle, a, c, cap, limits);
  const auto& fa = iv.from_a;
  const auto& keys = iv.keys;

  std::unordered_map<std::string, std::vector<VertexRef>> successors;
  auto next_of = [&](const VertexRef& v) -> const std::vector<VertexRef>& {
    auto it = successors.find(v.key);
    if (it != successors.end()) return it->second;
    int dv = fa.dist.at(v.key);
    std::vector<VertexRef> succ;
    for (auto& u : oracle.neighbors(v)) {
      if (keys.contains(u.key) && fa.dist.at(u.key) == dv + 1) succ.push_back(std::move(u));
    }
    sort_by_key(succ);
    return successors.emplace(v.key, std::move(succ)).first->second;
  };

  GeodesicEnumeration out;
  std::vector<VertexRef> path{a};
  // Iterative DFS; successors sorted by key gives lexicographic path order.
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    const auto& v = path.back();
    if (v == c) {
      if (out.paths.size() == limit) {
        out.truncated = true;
        break;
      }
      out.paths.push_back(path);
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const auto& succ = next_of(v);
    auto& i = cursor.back();
    if (i < succ.size()) {
      path.push_back(succ[i]);
      ++i;
      cursor.push_back(0);
    } else {
      path.pop_back();
      cursor.pop_back();
    }
  }
  return out;
}

bool shares_tail(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, const VertexRef& c,
                 int cap, const Limits& limits) {
  require_distinct(a, b, c);
  int dac = distance_within(oracle, a, c, cap, limits);
  int dbc = distance_within(oracle, b, c, cap, limits);
  auto fa = bfs(oracle, a, dac, limits);
  auto fb = bfs(oracle, b, dbc, limits);
  auto fc = bfs(oracle, c, std::max(dac, dbc), limits);
  for (const auto& [key, dz] : fc.dist) {
    if (dz < 1) continue;
    auto ia = fa.dist.find(key);
    auto ib = fb.dist.find(key);
    if (ia != fa.dist.end() && ib != fb.dist.end() && ia->second + dz == dac && ib->second + dz == dbc) {
      return true;
    }
  }
  return false;
}

bool is_rigid_triple(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, const VertexRef& c,
                     int cap, const Limits& limits) {
  require_distinct(a, b, c);
  int dab = distance_within(oracle, a, b, cap, limits);
  int dbc = distance_within(oracle, b, c, cap, limits);
  int dca = distance_within(oracle, c, a, cap, limits);
  auto fa = bfs(oracle, a, std::max(dab, dca), limits);
  auto fb = bfs(oracle, b, std::max(dab, dbc), limits);
  auto fc = bfs(oracle, c, std::max(dbc, dca), limits);

  // From x, is there a vertex other than x on geodesics to both y and z?
  auto meets = [](const DistanceField& fx, const DistanceField& fy, int dxy, const DistanceField& fz, int dxz) {
    for (const auto& [key, dx] : fx.dist) {
      if (dx == 0) continue;
      auto iy = fy.dist.find(key);
      auto iz = fz.dist.find(key);
      if (iy != fy.dist.end() && iz != fz.dist.end() && dx + iy->second == dxy && dx + iz->second == dxz) {
        return true;
      }
    }
    return false;
  };
  return !meets(fa, fb, dab, fc, dca) && !meets(fb, fa, dab, fc, dbc) && !meets(fc, fa, dca, fb, dbc);
}

Triple::Triple(VertexRef a, VertexRef b, VertexRef c, int dab, int dbc, int dca)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), dab_(dab), dbc_(dbc), dca_(dca) {
  require_distinct(a_, b_, c_);
  if (dab_ < 1 || dbc_ < 1 || dca_ < 1) throw InvalidInput("distinct vertices need positive distances");
  if (dab_ > dbc_ + dca_ || dbc_ > dab_ + dca_ || dca_ > dab_ + dbc_) {
    throw InvalidInput("triangle inequality violated");
  }
}

int Triple::min_side() const { return std::min({dab_, dbc_, dca_}); }

Triple make_triple(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, const VertexRef& c,
                   int cap, const Limits& limits) {
  require_distinct(a, b, c);
  return Triple(a, b, c, distance_within(oracle, a, b, cap, limits), distance_within(oracle, b, c, cap, limits),
                distance_within(oracle, c, a, cap, limits));
}

PathCheck is_geodesic_path(const NeighborOracle& oracle, std::span<const VertexRef> path, const Limits& limits) {
  PathCheck check;
  if (path.empty()) {
    check.reason = "empty path";
    return check;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto nbrs = oracle.neighbors(path[i]);
    if (std::find(nbrs.begin(), nbrs.end(), path[i + 1]) == nbrs.end()) {
      check.adjacent = false;
      check.first = i;
      check.second = i + 1;
      check.reason = path[i].display() + " and " + path[i + 1].display() + " are not adjacent";
      return check;
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto field = bfs(oracle, path[i], static_cast<int>(path.size() - 1 - i), limits);
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      auto d = field.at(path[j]);
      if (!d || *d != static_cast<int>(j - i)) {
        check.first = i;
        check.second = j;
        check.reason = "d(" + path[i].display() + ", " + path[j].display() + ") = " +
                       (d ? std::to_string(*d) : std::string("?")) + " but index gap is " + std::to_string(j - i);
        return check;
      }
    }
  }
  check.geodesic = true;
  return check;
}

std::string audit_oracle(const NeighborOracle& oracle, const VertexRef& center, int radius, const Limits& limits) {
  auto field = bfs(oracle, center, radius, limits);
  for (const auto& v : field.order) {
    auto nbrs = oracle.neighbors(v);
    if (oracle.neighbors(v) != nbrs) return "nondeterministic neighbors at " + v.display();
    std::unordered_set<std::string> seen;
    for (const auto& u : nbrs) {
      if (u == v) return "self-loop at " + v.display();
      if (!seen.insert(u.key).second) return "duplicate neighbor " + u.display() + " of " + v.display();
      auto back = oracle.neighbors(u);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        return "asymmetric edge " + v.display() + " -> " + u.display();
      }
    }
    if (auto bound = oracle.valence_bound(); bound && nbrs.size() > *bound) {
      return "valence bound exceeded at " + v.display();
    }
  }
  return {};
}

}  // namespace horobound
