#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace tvg {

struct NodeId {
  std::uint32_t value{};

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

// Position of an instant in the ordered time sequence of a Tvg. The label
// lives in the owning Tvg; index order is the temporal order.
struct TimeId {
  std::uint32_t index{};

  friend constexpr auto operator<=>(TimeId, TimeId) = default;
};

struct TemporalNode {
  NodeId node;
  TimeId time;

  friend constexpr auto operator<=>(const TemporalNode&, const TemporalNode&) = default;
};

// Directed relation from (origin_node, origin_time) to (dest_node, dest_time).
// Identity is the quadruple; the weight is payload.
struct DynamicEdge {
  NodeId origin_node;
  TimeId origin_time;
  NodeId dest_node;
  TimeId dest_time;
  double weight = 1.0;

  constexpr TemporalNode origin() const { return {origin_node, origin_time}; }
  constexpr TemporalNode destination() const { return {dest_node, dest_time}; }

  constexpr bool same_quadruple(const DynamicEdge& other) const {
    return origin_node == other.origin_node && origin_time == other.origin_time &&
           dest_node == other.dest_node && dest_time == other.dest_time;
  }

  friend constexpr bool operator==(const DynamicEdge&, const DynamicEdge&) = default;
};

// Lexicographic (u, ta, v, tb) order, ignoring weight.
struct QuadrupleLess {
  constexpr bool operator()(const DynamicEdge& a, const DynamicEdge& b) const {
    if (a.origin_node != b.origin_node) return a.origin_node < b.origin_node;
    if (a.origin_time != b.origin_time) return a.origin_time < b.origin_time;
    if (a.dest_node != b.dest_node) return a.dest_node < b.dest_node;
    return a.dest_time < b.dest_time;
  }
};

struct QuadrupleHash {
  std::size_t operator()(const DynamicEdge& e) const noexcept {
    std::uint64_t lo = (std::uint64_t{e.origin_node.value} << 32) | e.origin_time.index;
    std::uint64_t hi = (std::uint64_t{e.dest_node.value} << 32) | e.dest_time.index;
    // boost::hash_combine style mixing
    std::size_t h = std::hash<std::uint64_t>{}(lo);
    h ^= std::hash<std::uint64_t>{}(hi) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct QuadrupleEqual {
  constexpr bool operator()(const DynamicEdge& a, const DynamicEdge& b) const {
    return a.same_quadruple(b);
  }
};

enum class EdgeKind { Spatial, Temporal, Mixed, SelfLoop };
enum class Orientation { Progressive, Regressive, Contemporaneous };

struct EdgeClass {
  EdgeKind kind;
  Orientation orientation;

  friend constexpr bool operator==(EdgeClass, EdgeClass) = default;
};

std::string_view to_string(EdgeKind kind);
std::string_view to_string(Orientation orientation);

}  // namespace tvg
