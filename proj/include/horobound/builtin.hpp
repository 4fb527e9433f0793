#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horobound/group.hpp"
#include "horobound/oracle.hpp"
#include "horobound/rewriting.hpp"

namespace horobound {

/// A constructed graph: always an oracle; a group model and a presentation
/// when the graph is a Cayley graph.
struct Builtin {
  std::string descriptor;
  std::shared_ptr<const NeighborOracle> oracle;
  std::shared_ptr<const GroupModel> model;      // null for plain graphs
  std::optional<Presentation> presentation;     // when one is known
};

/// Names: zd:d, free:k, free_product:o1,o2,..., hex, heisenberg:std|extended,
/// braid:n, one_relator_example, one_relator_tietze, gamma1, gamma2, finite_graph:FILE,
/// presentation:FILE. Throws InvalidInput on unknown names or bad parameters.
Builtin builtin(std::string_view spec, const KbBounds& bounds = {});

/// Names accepted by builtin(), with a one-line parameter hint each.
std::vector<std::string> builtin_names();

/// The presentation of the one-relator example, relator abAdcD verbatim.
Presentation one_relator_presentation();

}  // namespace horobound
