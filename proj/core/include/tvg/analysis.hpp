#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvg/tvg.hpp"

namespace tvg {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 1.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed static graph over the |V||T| temporal nodes (flat-indexed with
// temporal_index), one arc per dynamic edge. Arcs keep the edge insertion
// order; out-neighbourhoods are available in compressed form.
class StaticDigraph {
 public:
  StaticDigraph(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return vertex_count_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const std::size_t> successors(std::size_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  std::size_t vertex_count_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;  // vertex_count + 1
  std::vector<std::size_t> targets_;
};

StaticDigraph to_static_digraph(const Tvg& tvg);

struct ReachSet {
  TemporalNode source;
  std::vector<TemporalNode> reached;  // ascending flat index; contains source
};

// Every temporal node reachable from `source` by following dynamic edges.
// No waiting between instants is assumed; apply add_waiting_edges first for
// snapshot-style semantics. Throws ModelError for an out-of-range source.
ReachSet reachable(const Tvg& tvg, const TemporalNode& source);

struct CycleOptions {
  // Do not count the 2-cycle formed by the two directed halves of an
  // undirected spatial contact, (u, t, v, t) with (v, t, u, t).
  bool ignore_spatial_pairs = false;
};

// True when the static digraph has a directed cycle; a self-loop counts.
bool is_cyclic(const Tvg& tvg, CycleOptions options = {});

bool has_regressive(const Tvg& tvg);

}  // namespace tvg
