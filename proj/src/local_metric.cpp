#include "horobound/local_metric.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "horobound/errors.hpp"
#include "horobound/group.hpp"
#include "horobound/metric.hpp"

namespace horobound {

namespace {

constexpr std::size_t kMaxLocalVertices = 40'000;

}  // namespace

void parallel_chunks(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
  if (workers <= 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  // Interleaved small chunks balance triangular loops.
  const std::size_t chunk = std::max<std::size_t>(1, n / (workers * 8));
  std::size_t next = 0;
  std::mutex mu;
  std::exception_ptr error;
  auto body = [&](unsigned id) {
    while (true) {
      std::size_t begin;
      {
        std::lock_guard lock(mu);
        if (next >= n || error) return;
        begin = next;
        next = std::min(n, next + chunk);
      }
      try {
        fn(begin, std::min(n, begin + chunk), id);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body, w);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint32_t LocalMetric::at(const VertexRef& v) const {
  auto it = index.find(v.key);
  if (it == index.end()) throw InvalidInput("vertex " + v.display() + " is outside the scanned ball");
  return it->second;
}

std::vector<std::uint32_t> LocalMetric::ball(int r) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    if (depth[i] <= r) out.push_back(i);
  }
  return out;
}

bool LocalMetric::shares_tail(std::size_t a, std::size_t b, std::size_t c) const {
  const int dac = d(a, c);
  const int dbc = d(b, c);
  for (auto u : neighbors[c]) {
    if (d(a, u) == dac - 1 && d(b, u) == dbc - 1) return true;
  }
  return false;
}

bool LocalMetric::is_rigid(std::size_t a, std::size_t b, std::size_t c) const {
  auto splits = [&](std::size_t x, std::size_t y, std::size_t z) {
    const int dy = d(x, y);
    const int dz = d(x, z);
    for (auto u : neighbors[x]) {
      if (d(u, y) == dy - 1 && d(u, z) == dz - 1) return true;
    }
    return false;
  };
  return !splits(a, b, c) && !splits(b, c, a) && !splits(c, a, b);
}

LocalMetric build_local_metric(const NeighborOracle& oracle, const VertexRef& center, int radius,
                               const Limits& limits, unsigned workers) {
  if (radius < 0 || radius > 8000) throw InvalidInput("local metric radius out of range");
  const auto* cayley = dynamic_cast<const CayleyOracle*>(&oracle);
  if (cayley && !cayley->model().metric_trusted()) {
    throw VerificationFailure("distances refused for " + cayley->model().name() + ": " +
                              cayley->model().trust_diagnostic());
  }

  LocalMetric lm;
  lm.center = center;
  lm.radius = radius;
  auto field = bfs(oracle, center, radius, limits);
  if (field.size() > kMaxLocalVertices) {
    throw ResourceLimit("ball of radius " + std::to_string(radius) + " has " + std::to_string(field.size()) +
                        " vertices; pairwise table capped at " + std::to_string(kMaxLocalVertices));
  }
  lm.vertices = field.order;
  std::sort(lm.vertices.begin(), lm.vertices.end());
  const std::size_t n = lm.vertices.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    lm.index.emplace(lm.vertices[i].key, i);
    lm.depth.push_back(field.dist.at(lm.vertices[i].key));
  }
  lm.neighbors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& u : oracle.neighbors(lm.vertices[i])) {
      auto it = lm.index.find(u.key);
      if (it != lm.index.end()) lm.neighbors[i].push_back(it->second);
    }
    std::sort(lm.neighbors[i].begin(), lm.neighbors[i].end());
  }
  lm.dist.assign(n * n, 0);

  if (cayley) {
    const auto& model = cayley->model();
    auto from_identity = bfs(oracle, model.identity(), 2 * radius, limits);
    std::vector<VertexRef> inverses;
    inverses.reserve(n);
    for (const auto& v : lm.vertices) inverses.push_back(model.inverse(v));
    parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned) {
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          auto g = model.multiply(inverses[i], lm.vertices[j]);
          auto it = from_identity.dist.find(g.key);
          if (it == from_identity.dist.end()) throw VerificationFailure("inconsistent group model: |g^-1 h| > 2r");
          lm.dist[i * n + j] = static_cast<std::uint16_t>(it->second);
          lm.dist[j * n + i] = static_cast<std::uint16_t>(it->second);
        }
      }
    });
  } else {
    parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned) {
      for (std::size_t i = begin; i < end; ++i) {
        auto f = bfs(oracle, lm.vertices[i], 2 * radius, limits);
        for (std::size_t j = 0; j < n; ++j) {
          auto it = f.dist.find(lm.vertices[j].key);
          if (it == f.dist.end()) throw VerificationFailure("ball vertices farther apart than 2r");
          lm.dist[i * n + j] = static_cast<std::uint16_t>(it->second);
        }
      }
    });
  }
  return lm;
}

}  // namespace horobound
