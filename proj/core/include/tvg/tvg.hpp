#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tvg/time_order.hpp"
#include "tvg/types.hpp"

namespace tvg {

// (|V|, |T|): fixes where each temporal node sits in the matrix forms.
struct Companion {
  std::size_t nodes = 0;
  std::size_t times = 0;

  constexpr std::size_t temporal_nodes() const { return nodes * times; }

  friend constexpr bool operator==(Companion, Companion) = default;
};

// A finite discrete time-varying graph H = (V, E, T).
//
// V is the index range [0, node_count). T is an ordered sequence of unique
// labels whose position is the total temporal order. E is a set of dynamic
// edges kept in insertion order; a quadruple appears at most once.
class Tvg {
 public:
  Tvg() = default;

  // Throws ModelError on a duplicate time label.
  Tvg(std::size_t node_count, std::vector<std::string> time_labels);

  std::size_t node_count() const { return node_count_; }
  std::size_t time_count() const { return time_labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  Companion companion() const { return {node_count_, time_labels_.size()}; }

  std::span<const std::string> time_labels() const { return time_labels_; }
  const std::string& time_label(TimeId t) const;
  std::optional<TimeId> find_time(std::string_view label) const;
  // Like find_time, but throws ModelError for an unknown label.
  TimeId time(std::string_view label) const;

  std::span<const DynamicEdge> edges() const { return edges_; }
  bool contains(const DynamicEdge& e) const { return index_.contains(e); }
  // The stored edge with the same quadruple, if any.
  const DynamicEdge* find(const DynamicEdge& e) const;

  bool in_range(NodeId u) const { return u.value < node_count_; }
  bool in_range(TimeId t) const { return t.index < time_labels_.size(); }
  bool in_range(const TemporalNode& tn) const { return in_range(tn.node) && in_range(tn.time); }

  // Throws ModelError if a component is out of range, the weight is zero or
  // not finite, or the quadruple is already present.
  void add_edge(const DynamicEdge& e);
  // Same range checks; returns false instead of throwing on a duplicate.
  bool try_add_edge(const DynamicEdge& e);

  // Builds an edge by time label. Throws ModelError for an unknown label.
  DynamicEdge make_edge(std::size_t u, std::string_view ta, std::size_t v, std::string_view tb,
                        double weight = 1.0) const;

  // Same V, same T sequence, same edge set (as a set) with equal weights.
  friend bool operator==(const Tvg& a, const Tvg& b);

 private:
  void check_range(const DynamicEdge& e) const;

  std::size_t node_count_ = 0;
  std::vector<std::string> time_labels_;
  std::unordered_map<std::string, TimeId> time_lookup_;
  std::vector<DynamicEdge> edges_;
  std::unordered_set<DynamicEdge, QuadrupleHash, QuadrupleEqual> index_;
};

// An edge whose instants are still text labels, as read from an external
// model before the time sequence is known.
struct LabeledEdge {
  std::size_t origin_node = 0;
  std::string origin_time;
  std::size_t dest_node = 0;
  std::string dest_time;
  double weight = 1.0;
};

struct LabeledBuildOptions {
  // Defaults to max referenced node + 1.
  std::optional<std::size_t> node_count;
  TimeOrdering ordering = TimeOrdering::Natural;
  // Required (and authoritative) for Declared; for Numeric/Natural these are
  // extra instants merged with the ones the edges reference.
  std::vector<std::string> time_labels;
  // Drop repeated quadruples instead of throwing.
  bool merge_duplicates = false;
};

// Assembles a Tvg from labeled edges: T is the union of referenced and extra
// labels put in order by `ordering`.
Tvg build_tvg(std::span<const LabeledEdge> edges, const LabeledBuildOptions& options);

}  // namespace tvg
