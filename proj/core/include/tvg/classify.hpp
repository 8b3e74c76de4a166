#pragma once

#include <variant>
#include <vector>

#include "tvg/tvg.hpp"
#include "tvg/types.hpp"

namespace tvg {

// The four canonical projections: 1 -> origin node, 2 -> origin time,
// 3 -> destination node, 4 -> destination time.
template <int Axis>
constexpr auto project(const DynamicEdge& e) {
  static_assert(Axis >= 1 && Axis <= 4, "projection axis must be 1..4");
  if constexpr (Axis == 1) {
    return e.origin_node;
  } else if constexpr (Axis == 2) {
    return e.origin_time;
  } else if constexpr (Axis == 3) {
    return e.dest_node;
  } else {
    return e.dest_time;
  }
}

// Runtime-axis variant. Throws ModelError for an axis outside 1..4.
std::variant<NodeId, TimeId> project(const DynamicEdge& e, int axis);

constexpr EdgeClass classify(const DynamicEdge& e) {
  const bool same_node = e.origin_node == e.dest_node;
  const bool same_time = e.origin_time == e.dest_time;
  EdgeKind kind = same_node ? (same_time ? EdgeKind::SelfLoop : EdgeKind::Temporal)
                            : (same_time ? EdgeKind::Spatial : EdgeKind::Mixed);
  Orientation orientation = e.origin_time < e.dest_time   ? Orientation::Progressive
                            : e.dest_time < e.origin_time ? Orientation::Regressive
                                                          : Orientation::Contemporaneous;
  return {kind, orientation};
}

struct Partition {
  std::vector<NodeId> connected_nodes;
  std::vector<NodeId> disconnected_nodes;
  std::vector<TimeId> used_times;
  std::vector<TimeId> unused_times;
};

// Connected nodes and used instants recovered from E alone; the complements
// are taken against V and T. All four lists are ascending.
Partition partition(const Tvg& tvg);

}  // namespace tvg
