#include "tvg/algebra.hpp"

#include <string>
#include <unordered_set>

#include "tvg/classify.hpp"
#include "tvg/error.hpp"

namespace tvg {

namespace {

void require_square_side(const SparseMatrix& m, Companion companion) {
  const std::size_t side = companion.temporal_nodes();
  if (m.rows() != side || m.cols() != side) {
    throw ModelError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", companion (" + std::to_string(companion.nodes) + ", " +
                     std::to_string(companion.times) + ") requires " + std::to_string(side) +
                     "x" + std::to_string(side));
  }
}

}  // namespace

std::size_t temporal_index(const TemporalNode& tn, Companion companion) {
  if (tn.node.value >= companion.nodes || tn.time.index >= companion.times) {
    throw ModelError("temporal node (" + std::to_string(tn.node.value) + ", " +
                     std::to_string(tn.time.index) + ") outside companion (" +
                     std::to_string(companion.nodes) + ", " + std::to_string(companion.times) +
                     ")");
  }
  return std::size_t{tn.time.index} * companion.nodes + tn.node.value;
}

TemporalNode temporal_node_at(std::size_t index, Companion companion) {
  if (index >= companion.temporal_nodes()) {
    throw ModelError("flat index " + std::to_string(index) + " outside " +
                     std::to_string(companion.temporal_nodes()) + " temporal nodes");
  }
  return {NodeId{static_cast<std::uint32_t>(index % companion.nodes)},
          TimeId{static_cast<std::uint32_t>(index / companion.nodes)}};
}

SparseMatrix adjacency_matrix(const Tvg& tvg) {
  const Companion c = tvg.companion();
  std::vector<MatrixEntry> entries;
  entries.reserve(tvg.edge_count());
  for (const auto& e : tvg.edges()) {
    entries.push_back({temporal_index(e.origin(), c), temporal_index(e.destination(), c), e.weight});
  }
  return SparseMatrix::from_entries(c.temporal_nodes(), c.temporal_nodes(), std::move(entries));
}

Tvg refold(const SparseMatrix& m, Companion companion, std::vector<std::string> time_labels) {
  require_square_side(m, companion);
  if (time_labels.empty()) {
    time_labels.reserve(companion.times);
    for (std::size_t t = 0; t < companion.times; ++t) time_labels.push_back("t" + std::to_string(t));
  } else if (time_labels.size() != companion.times) {
    throw ModelError("refold given " + std::to_string(time_labels.size()) +
                     " time labels for companion with " + std::to_string(companion.times));
  }
  Tvg result(companion.nodes, std::move(time_labels));
  for (const auto& entry : m.entries()) {
    TemporalNode from = temporal_node_at(entry.row, companion);
    TemporalNode to = temporal_node_at(entry.col, companion);
    result.add_edge({from.node, from.time, to.node, to.time, entry.value});
  }
  return result;
}

std::vector<DynamicEdge> default_incidence_order(const Tvg& tvg) {
  std::vector<DynamicEdge> order;
  order.reserve(tvg.edge_count());
  for (const auto& e : tvg.edges()) {
    if (e.origin_time != e.dest_time) order.push_back(e);
  }
  for (const auto& e : tvg.edges()) {
    if (e.origin_time == e.dest_time) order.push_back(e);
  }
  return order;
}

SparseMatrix incidence_matrix(const Tvg& tvg, std::span<const DynamicEdge> edge_order) {
  if (edge_order.size() != tvg.edge_count()) {
    throw ModelError("edge order lists " + std::to_string(edge_order.size()) + " edges, graph has " +
                     std::to_string(tvg.edge_count()));
  }
  const Companion c = tvg.companion();
  std::unordered_set<DynamicEdge, QuadrupleHash, QuadrupleEqual> seen;
  std::vector<MatrixEntry> entries;
  entries.reserve(2 * edge_order.size());
  for (std::size_t col = 0; col < edge_order.size(); ++col) {
    const DynamicEdge& e = edge_order[col];
    if (!tvg.contains(e) || !seen.insert(e).second) {
      throw ModelError("edge order is not a permutation of the edge set (column " +
                       std::to_string(col) + ")");
    }
    if (classify(e).kind == EdgeKind::SelfLoop) {
      throw ModelError("self-loop edge at node " + std::to_string(e.origin_node.value) +
                       " has no directed incidence column");
    }
    entries.push_back({temporal_index(e.origin(), c), col, -1.0});
    entries.push_back({temporal_index(e.destination(), c), col, 1.0});
  }
  return SparseMatrix::from_entries(c.temporal_nodes(), edge_order.size(), std::move(entries));
}

SparseMatrix incidence_matrix(const Tvg& tvg) {
  auto order = default_incidence_order(tvg);
  return incidence_matrix(tvg, order);
}

BlockReport block_report(const SparseMatrix& m, Companion companion) {
  require_square_side(m, companion);
  BlockReport report;
  report.times = companion.times;
  report.blocks.assign(companion.times * companion.times, 0);
  for (const auto& entry : m.entries()) {
    const std::size_t from_time = entry.row / companion.nodes;
    const std::size_t to_time = entry.col / companion.nodes;
    ++report.blocks[from_time * companion.times + to_time];
    if (from_time == to_time) {
      ++report.spatial_nnz;
    } else if (from_time < to_time) {
      ++report.progressive_nnz;
    } else {
      ++report.regressive_nnz;
    }
  }
  return report;
}

}  // namespace tvg
