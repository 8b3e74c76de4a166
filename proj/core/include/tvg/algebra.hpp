#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tvg/sparse_matrix.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

// Flat position of a temporal node in the matrix forms: time-major blocks of
// |V| nodes, i.e. time * |V| + node. Throws ModelError when out of range.
std::size_t temporal_index(const TemporalNode& tn, Companion companion);

// Inverse of temporal_index.
TemporalNode temporal_node_at(std::size_t index, Companion companion);

// Matricized adjacency tensor: (|V||T|) x (|V||T|), one nonzero per edge at
// (temporal_index(origin), temporal_index(destination)) carrying its weight.
SparseMatrix adjacency_matrix(const Tvg& tvg);

// Rebuilds a Tvg from its adjacency matrix. `time_labels` names the |T|
// instants; when empty they default to "t0", "t1", ... Throws ModelError
// when the matrix is not square with side |V||T|.
Tvg refold(const SparseMatrix& m, Companion companion, std::vector<std::string> time_labels = {});

// Temporal and mixed edges first, then spatial (and self-loop) edges, each
// group in insertion order.
std::vector<DynamicEdge> default_incidence_order(const Tvg& tvg);

// Directed incidence matrix, (|V||T|) x |E|: column j holds -1 at the
// origin and +1 at the destination of edge j of `edge_order`. Throws
// ModelError for a self-loop edge or when `edge_order` is not a permutation
// of E.
SparseMatrix incidence_matrix(const Tvg& tvg, std::span<const DynamicEdge> edge_order);
SparseMatrix incidence_matrix(const Tvg& tvg);

// Nonzero counts of an adjacency matrix by position in the |T| x |T| grid of
// |V| x |V| time blocks.
struct BlockReport {
  std::size_t spatial_nnz = 0;      // diagonal blocks
  std::size_t progressive_nnz = 0;  // strictly above the block diagonal
  std::size_t regressive_nnz = 0;   // strictly below
  std::size_t times = 0;
  std::vector<std::size_t> blocks;  // times x times, row-major by origin time

  std::size_t total() const { return spatial_nnz + progressive_nnz + regressive_nnz; }
  std::size_t block(std::size_t origin_time, std::size_t dest_time) const {
    return blocks[origin_time * times + dest_time];
  }
};

BlockReport block_report(const SparseMatrix& m, Companion companion);

}  // namespace tvg
