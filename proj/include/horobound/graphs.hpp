#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "horobound/oracle.hpp"

namespace horobound {

/// Parses "(a,b,...)" into integers; throws InvalidInput.
std::vector<std::int32_t> parse_int_tuple(std::string_view text);

/// The three-row ladder on N x {-1, 0, 1} (columns start at 1): rows +1 and
/// -1 are paths, and every (k, 0) hangs between (k, 1) and (k, -1).
/// With `row0_edges` the middle row is also a path, (k, 0) -- (k+1, 0).
class LadderGraph final : public NeighborOracle {
 public:
  explicit LadderGraph(bool row0_edges) : row0_edges_(row0_edges) {}

  static VertexRef vertex(std::int32_t column, std::int32_t row);
  static std::pair<std::int32_t, std::int32_t> coordinates(const VertexRef& v);

  std::vector<VertexRef> neighbors(const VertexRef& v) const override;
  std::optional<std::size_t> valence_bound() const override { return row0_edges_ ? 4 : 3; }
  std::string descriptor() const override { return row0_edges_ ? "gamma2" : "gamma1"; }
  VertexRef parse_vertex(std::string_view text) const override;
  VertexRef from_key(std::string_view key) const override;

 private:
  bool row0_edges_;
};

/// Finite undirected graph loaded from {"vertices": [labels], "edges": [[i,j], ...]}.
class FiniteGraph final : public NeighborOracle {
 public:
  /// Throws InvalidInput on duplicate labels, out-of-range indices,
  /// self-loops, or repeated edges (in either orientation).
  static FiniteGraph from_json(const nlohmann::json& doc, std::string descriptor = "finite_graph");
  static FiniteGraph load(const std::string& path);

  std::vector<VertexRef> neighbors(const VertexRef& v) const override;
  std::string descriptor() const override { return descriptor_; }
  VertexRef parse_vertex(std::string_view text) const override;
  VertexRef from_key(std::string_view key) const override;

  std::size_t vertex_count() const { return labels_.size(); }
  VertexRef vertex(std::size_t index) const;

 private:
  std::string descriptor_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_of_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace horobound
