#include "tvg/classify.hpp"

#include <string>

#include "tvg/error.hpp"

namespace tvg {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Spatial: return "Spatial";
    case EdgeKind::Temporal: return "Temporal";
    case EdgeKind::Mixed: return "Mixed";
    case EdgeKind::SelfLoop: return "SelfLoop";
  }
  return "?";
}

std::string_view to_string(Orientation orientation) {
  switch (orientation) {
    case Orientation::Progressive: return "Progressive";
    case Orientation::Regressive: return "Regressive";
    case Orientation::Contemporaneous: return "Contemporaneous";
  }
  return "?";
}

std::variant<NodeId, TimeId> project(const DynamicEdge& e, int axis) {
  switch (axis) {
    case 1: return project<1>(e);
    case 2: return project<2>(e);
    case 3: return project<3>(e);
    case 4: return project<4>(e);
    default: throw ModelError("projection axis must be 1..4, got " + std::to_string(axis));
  }
}

Partition partition(const Tvg& tvg) {
  std::vector<bool> node_seen(tvg.node_count(), false);
  std::vector<bool> time_seen(tvg.time_count(), false);
  for (const auto& e : tvg.edges()) {
    node_seen[project<1>(e).value] = true;
    node_seen[project<3>(e).value] = true;
    time_seen[project<2>(e).index] = true;
    time_seen[project<4>(e).index] = true;
  }

  Partition p;
  for (std::uint32_t u = 0; u < node_seen.size(); ++u) {
    (node_seen[u] ? p.connected_nodes : p.disconnected_nodes).push_back(NodeId{u});
  }
  for (std::uint32_t t = 0; t < time_seen.size(); ++t) {
    (time_seen[t] ? p.used_times : p.unused_times).push_back(TimeId{t});
  }
  return p;
}

}  // namespace tvg
