#pragma once

// Shared test fixtures: the example graph W built in code, random graph
// generators, and brute-force oracles that do not go through the library's
// own matrix or traversal code.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tvg/tvg.hpp"

namespace tvg::testing {

inline std::vector<std::string> time_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < count; ++t) labels.push_back("t" + std::to_string(t));
  return labels;
}

// W: every node waits t0 -> t1 -> t2; contacts 0-3, 0-1, 1-2 at t0 and 2-3
// at t1, each stored in both directions.
inline Tvg make_w() {
  Tvg w(4, time_labels(3));
  for (std::size_t u = 0; u < 4; ++u) {
    w.add_edge(w.make_edge(u, "t0", u, "t1"));
    w.add_edge(w.make_edge(u, "t1", u, "t2"));
  }
  const std::tuple<std::size_t, std::size_t, const char*> contacts[] = {
      {0, 3, "t0"}, {0, 1, "t0"}, {1, 2, "t0"}, {2, 3, "t1"}};
  for (const auto& [u, v, t] : contacts) {
    w.add_edge(w.make_edge(u, t, v, t));
    w.add_edge(w.make_edge(v, t, u, t));
  }
  return w;
}

struct RandomTvgLimits {
  std::size_t max_nodes = 20;
  std::size_t max_times = 10;
  std::size_t max_edges = 200;
  bool allow_self_loops = true;
  bool weighted = false;
};

// Uniform size draws, then up to max_edges distinct quadruples.
inline Tvg random_tvg(std::mt19937_64& rng, const RandomTvgLimits& limits) {
  std::uniform_int_distribution<std::size_t> node_dist(1, limits.max_nodes);
  std::uniform_int_distribution<std::size_t> time_dist(1, limits.max_times);
  const std::size_t n = node_dist(rng);
  const std::size_t t = time_dist(rng);
  Tvg g(n, time_labels(t));

  const std::size_t capacity = n * t * n * t;
  std::uniform_int_distribution<std::size_t> edge_dist(0, std::min(limits.max_edges, capacity));
  const std::size_t target = edge_dist(rng);
  std::uniform_int_distribution<std::uint32_t> pick_node(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<std::uint32_t> pick_time(0, static_cast<std::uint32_t>(t - 1));
  std::uniform_int_distribution<int> pick_weight(1, 9);

  std::size_t attempts = 0;
  while (g.edge_count() < target && attempts++ < 50 * (target + 1)) {
    DynamicEdge e{NodeId{pick_node(rng)}, TimeId{pick_time(rng)}, NodeId{pick_node(rng)},
                  TimeId{pick_time(rng)}, limits.weighted ? pick_weight(rng) * 0.5 : 1.0};
    if (!limits.allow_self_loops && e.origin_node == e.dest_node && e.origin_time == e.dest_time) {
      continue;
    }
    g.try_add_edge(e);
  }
  return g;
}

// Reflexive-transitive closure of the temporal-node relation by repeated
// boolean matrix squaring: R_0 = I | A, R_{k+1} = R_k * R_k until stable.
// Vertices are numbered node + time * |V| here too, but only through the
// edge quadruples, not through library index helpers.
inline std::vector<std::vector<bool>> closure_by_squaring(const Tvg& g) {
  const std::size_t n = g.node_count() * g.time_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& e : g.edges()) {
    r[e.origin_time.index * g.node_count() + e.origin_node.value]
     [e.dest_time.index * g.node_count() + e.dest_node.value] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!r[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (r[k][j]) next[i][j] = true;
        }
      }
    }
    changed = next != r;
    r = std::move(next);
  }
  return r;
}

// Per-node and per-instant incidence scan, independent of partition().
struct BruteForcePartition {
  std::set<std::uint32_t> connected_nodes;
  std::set<std::uint32_t> used_times;
};

inline BruteForcePartition brute_force_partition(const Tvg& g) {
  BruteForcePartition p;
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    for (const auto& e : g.edges()) {
      if (e.origin_node.value == u || e.dest_node.value == u) {
        p.connected_nodes.insert(u);
        break;
      }
    }
  }
  for (std::uint32_t t = 0; t < g.time_count(); ++t) {
    for (const auto& e : g.edges()) {
      if (e.origin_time.index == t || e.dest_time.index == t) {
        p.used_times.insert(t);
        break;
      }
    }
  }
  return p;
}

}  // namespace tvg::testing
