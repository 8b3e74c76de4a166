#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tvg/time_order.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

// ---------------------------------------------------------------------------
// Snapshot models: a sequence of static graphs, one per instant.

struct Snapshot {
  std::string label;
  std::vector<std::pair<NodeId, NodeId>> pairs;  // directed (from, to)
};

struct SnapshotSequence {
  std::size_t node_count = 0;
  std::vector<Snapshot> snapshots;
};

// One spatial edge per pair per snapshot; T is the snapshot labels in order.
// Throws ModelError for an out-of-range node, a pair (u, u), a repeated pair
// within one snapshot, or a repeated label.
Tvg from_snapshots(const SnapshotSequence& sequence);

// Adds every missing temporal edge (u, t_i, u, t_i+1) between consecutive
// instants, turning the "nodes remember across snapshots" convention into
// explicit structure.
Tvg add_waiting_edges(const Tvg& tvg);

// ---------------------------------------------------------------------------
// Continuous time interval (CTI) models.

struct CtiInterval {
  NodeId u;
  NodeId v;
  double t_open = 0.0;
  double t_close = 0.0;
  bool bidirectional = true;
};

enum class CtiMode {
  MixedEdges,      // one progressive mixed edge (u, t_open, v, t_close) per interval
  Snapshots,       // a spatial edge at every covered instant
  SpatialTemporal  // Snapshots plus waiting edges across consecutive covered instants
};

// Which global instants an interval covers in the Snapshots and
// SpatialTemporal modes.
enum class CtiEndpoints {
  HalfOpen,  // t_open < t <= t_close
  Closed     // t_open <= t <= t_close
};

struct CtiOptions {
  CtiMode mode = CtiMode::MixedEdges;
  CtiEndpoints endpoints = CtiEndpoints::HalfOpen;
  std::optional<std::size_t> node_count;  // defaults to max node + 1
};

std::string_view to_string(CtiMode mode);
std::optional<CtiMode> parse_cti_mode(std::string_view text);
std::string_view to_string(CtiEndpoints endpoints);
std::optional<CtiEndpoints> parse_cti_endpoints(std::string_view text);

// T is the sorted set of distinct interval endpoints, labelled by their
// shortest decimal form. Repeated intervals collapse onto the same edges.
// Throws ModelError when t_open >= t_close, an endpoint is not finite, or
// u == v.
Tvg from_cti(std::span<const CtiInterval> intervals, const CtiOptions& options);

// ---------------------------------------------------------------------------
// Label-based importers (STE and TME).

struct ImportOptions {
  std::optional<std::size_t> node_count;  // defaults to max node + 1
  // Defaults to Numeric when every label is a number, Natural otherwise.
  std::optional<TimeOrdering> ordering;
  // Extra instants; with Declared, the complete ordered time sequence.
  std::vector<std::string> time_labels;
};

struct SteContact {
  NodeId u;
  NodeId v;
  std::string time;
};

struct SteWait {
  NodeId node;
  std::string from;
  std::string to;
};

// Contacts become spatial edges, waits become progressive temporal edges.
// Repeated contacts or waits collapse onto one edge.
// Throws ModelError for a contact with u == v, or a wait that does not move
// forward in time.
Tvg from_ste(std::span<const SteContact> contacts, std::span<const SteWait> waits,
             const ImportOptions& options = {});

// Imports temporal and mixed edges verbatim. Throws ModelError for any edge
// whose instants coincide (spatial or self-loop) or that points backwards
// in time.
Tvg from_tme(std::span<const LabeledEdge> edges, const ImportOptions& options = {});

// ---------------------------------------------------------------------------
// Model classes and the representation map between them.

enum class ModelClass { Snapshot, CTI, STE, TME, Unifying };

inline constexpr ModelClass kAllModelClasses[] = {ModelClass::Snapshot, ModelClass::CTI,
                                                  ModelClass::STE, ModelClass::TME,
                                                  ModelClass::Unifying};

std::string_view to_string(ModelClass model);
std::optional<ModelClass> parse_model_class(std::string_view text);

// Every class whose edge vocabulary covers the graph. Prior classes admit no
// regressive edge; CTI admits the output shapes of its three discretizations.
// Unifying is always present.
std::set<ModelClass> detect_class(const Tvg& tvg);

// True when models of class `src` can represent every model of class `dst`.
bool can_represent(ModelClass src, ModelClass dst);

}  // namespace tvg
