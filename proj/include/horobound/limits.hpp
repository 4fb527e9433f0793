#pragma once

#include <cstddef>

namespace horobound {

struct Limits {
  std::size_t max_vertices = 5'000'000;  // per distance field
  std::size_t max_enumeration = 10'000;  // geodesic enumeration limit ceiling

  /// Defaults overridden by HOROBOUND_MAX_VERTICES / HOROBOUND_MAX_ENUMERATION.
  static Limits from_env();
};

}  // namespace horobound
