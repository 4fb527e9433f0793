#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horobound/vertex.hpp"

namespace horobound {

/// Lazily expanded, locally finite, undirected graph.
///
/// Implementations must be symmetric (u in neighbors(v) iff v in
/// neighbors(u)), free of self-loops and duplicates, deterministic, and safe
/// for concurrent calls from several threads.
class NeighborOracle {
 public:
  virtual ~NeighborOracle() = default;

  virtual std::vector<VertexRef> neighbors(const VertexRef& v) const = 0;

  /// Upper bound on vertex degree, if known.
  virtual std::optional<std::size_t> valence_bound() const { return std::nullopt; }

  /// Human-readable graph descriptor, echoed in reports.
  virtual std::string descriptor() const = 0;

  /// Resolves a user-facing vertex address (a label or a generator word).
  /// Throws InvalidInput on malformed or unknown addresses.
  virtual VertexRef parse_vertex(std::string_view text) const = 0;

  /// Recovers a vertex from its canonical key (labels are recomputed).
  virtual VertexRef from_key(std::string_view key) const = 0;
};

}  // namespace horobound
