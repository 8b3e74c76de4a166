#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tvg/convert.hpp"
#include "tvg/sparse_matrix.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

// TVG text format.
//
//   [meta]
//   nodes 4
//   times 3
//   order natural          # numeric | natural | declared
//   sequence a b c         # only with "order declared": the full time sequence
//   [unused]
//   node 2                 # one record per disconnected node
//   time t1                # one record per unused instant
//   [edges]
//   0 t0 3 t0              # u ta v tb [weight], weight defaults to 1
//
// Connected nodes and used instants are not written: they are recovered from
// the edge records. `#` starts a comment. A file holding only edge lines is
// accepted; its nodes are 0..max and its instants are ordered numerically
// when every label is a number, naturally otherwise.
void write_tvg(const Tvg& tvg, std::ostream& out);
Tvg read_tvg(std::istream& in);

struct StorageReport {
  std::size_t edge_items = 0;
  std::size_t disconnected_node_items = 0;
  std::size_t unused_time_items = 0;
  std::size_t total_items = 0;

  friend bool operator==(const StorageReport&, const StorageReport&) = default;
};

StorageReport storage_report(const Tvg& tvg);

// Coordinate matrix format: "rows cols nnz" then one "row col value" line per
// nonzero, row-major. Lines starting with '#' are ignored on input.
void write_matrix(const SparseMatrix& m, std::ostream& out);
SparseMatrix read_matrix(std::istream& in);

// Model-class inputs. Every file may carry an optional "nodes N" line and
// '#' comments.

// "snapshot <label>" opens a snapshot; following "u v" lines are its pairs.
SnapshotSequence read_snapshots(std::istream& in);

struct CtiInput {
  std::vector<CtiInterval> intervals;
  std::optional<std::size_t> node_count;
};

// "u v t_open t_close [bidir|directed]"; bidirectional when omitted.
CtiInput read_cti(std::istream& in);

struct SteInput {
  std::vector<SteContact> contacts;
  std::vector<SteWait> waits;
  ImportOptions options;
};

// "contact u v t" and "wait u ta tb" lines; optional "order <rule>".
SteInput read_ste(std::istream& in);

struct TmeInput {
  std::vector<LabeledEdge> edges;
  ImportOptions options;
};

// "u ta v tb [weight]" lines; optional "order <rule>".
TmeInput read_tme(std::istream& in);

}  // namespace tvg
