#include "tvg/analysis.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "tvg/algebra.hpp"
#include "tvg/classify.hpp"
#include "tvg/error.hpp"

namespace tvg {

StaticDigraph::StaticDigraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), offsets_(vertex_count + 1, 0) {
  for (const auto& a : arcs_) {
    if (a.from >= vertex_count_ || a.to >= vertex_count_) {
      throw ModelError("arc (" + std::to_string(a.from) + ", " + std::to_string(a.to) +
                       ") outside " + std::to_string(vertex_count_) + " vertices");
    }
    ++offsets_[a.from + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(arcs_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& a : arcs_) targets_[cursor[a.from]++] = a.to;
}

StaticDigraph to_static_digraph(const Tvg& tvg) {
  const Companion c = tvg.companion();
  std::vector<Arc> arcs;
  arcs.reserve(tvg.edge_count());
  for (const auto& e : tvg.edges()) {
    arcs.push_back({temporal_index(e.origin(), c), temporal_index(e.destination(), c), e.weight});
  }
  return StaticDigraph(c.temporal_nodes(), std::move(arcs));
}

ReachSet reachable(const Tvg& tvg, const TemporalNode& source) {
  const Companion c = tvg.companion();
  const std::size_t start = temporal_index(source, c);
  const StaticDigraph g = to_static_digraph(tvg);

  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> frontier{start};
  seen[start] = true;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop_front();
    for (std::size_t w : g.successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        frontier.push_back(w);
      }
    }
  }

  ReachSet result{source, {}};
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) result.reached.push_back(temporal_node_at(v, c));
  }
  return result;
}

namespace {

// Strongly connected component id per vertex (iterative Tarjan).
std::vector<std::size_t> strong_components(const StaticDigraph& g, std::size_t& count) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t vertex;
    std::size_t next_child;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = g.successors(f.vertex);
      if (f.next_child < succ.size()) {
        const std::size_t w = succ[f.next_child++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.vertex] = std::min(low[f.vertex], index[w]);
        }
        continue;
      }
      const std::size_t v = f.vertex;
      call.pop_back();
      if (!call.empty()) low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = count;
        } while (w != v);
        ++count;
      }
    }
  }
  return component;
}

}  // namespace

bool is_cyclic(const Tvg& tvg, CycleOptions options) {
  if (tvg.edge_count() == 0) return false;
  for (const auto& e : tvg.edges()) {
    if (classify(e).kind == EdgeKind::SelfLoop) return true;
  }

  const StaticDigraph g = to_static_digraph(tvg);
  std::size_t count = 0;
  const std::vector<std::size_t> component = strong_components(g, count);
  std::vector<std::size_t> size(count, 0);
  for (std::size_t c : component) ++size[c];

  if (!options.ignore_spatial_pairs) {
    return std::any_of(size.begin(), size.end(), [](std::size_t s) { return s > 1; });
  }

  // Inside a component, an arc that is not half of a spatial pair lies on a
  // cycle other than such a pair. If every arc is paired, the component is a
  // symmetric digraph and has a longer cycle exactly when its undirected
  // pairs do not form a tree.
  std::vector<std::size_t> paired_arcs(count, 0);
  for (const auto& e : tvg.edges()) {
    const std::size_t from = std::size_t{e.origin_time.index} * tvg.node_count() + e.origin_node.value;
    const std::size_t to = std::size_t{e.dest_time.index} * tvg.node_count() + e.dest_node.value;
    if (component[from] != component[to]) continue;
    const bool paired = classify(e).kind == EdgeKind::Spatial &&
                        tvg.contains({e.dest_node, e.dest_time, e.origin_node, e.origin_time});
    if (!paired) return true;
    ++paired_arcs[component[from]];
  }
  for (std::size_t c = 0; c < count; ++c) {
    if (size[c] > 1 && paired_arcs[c] / 2 >= size[c]) return true;
  }
  return false;
}

bool has_regressive(const Tvg& tvg) {
  return std::any_of(tvg.edges().begin(), tvg.edges().end(), [](const DynamicEdge& e) {
    return classify(e).orientation == Orientation::Regressive;
  });
}

}  // namespace tvg
