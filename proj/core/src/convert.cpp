#include "tvg/convert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvg/classify.hpp"
#include "tvg/error.hpp"

namespace tvg {

namespace {

std::uint32_t checked_index(std::size_t k) { return static_cast<std::uint32_t>(k); }

LabeledBuildOptions build_options(const ImportOptions& options,
                                  std::span<const std::string> referenced) {
  LabeledBuildOptions build;
  build.node_count = options.node_count;
  build.time_labels = options.time_labels;
  if (options.ordering) {
    build.ordering = *options.ordering;
  } else {
    std::vector<std::string> all(referenced.begin(), referenced.end());
    all.insert(all.end(), options.time_labels.begin(), options.time_labels.end());
    build.ordering = infer_ordering(all);
  }
  return build;
}

}  // namespace

Tvg from_snapshots(const SnapshotSequence& sequence) {
  std::vector<std::string> labels;
  labels.reserve(sequence.snapshots.size());
  for (const auto& s : sequence.snapshots) labels.push_back(s.label);

  Tvg result(sequence.node_count, std::move(labels));
  for (std::size_t k = 0; k < sequence.snapshots.size(); ++k) {
    const TimeId t{checked_index(k)};
    for (const auto& [u, v] : sequence.snapshots[k].pairs) {
      if (u == v) {
        throw ModelError("snapshot '" + sequence.snapshots[k].label + "' pairs node " +
                         std::to_string(u.value) + " with itself");
      }
      result.add_edge({u, t, v, t});
    }
  }
  return result;
}

Tvg add_waiting_edges(const Tvg& tvg) {
  Tvg result = tvg;
  for (std::size_t t = 0; t + 1 < tvg.time_count(); ++t) {
    for (std::size_t u = 0; u < tvg.node_count(); ++u) {
      const NodeId node{checked_index(u)};
      result.try_add_edge({node, TimeId{checked_index(t)}, node, TimeId{checked_index(t + 1)}});
    }
  }
  return result;
}

std::string_view to_string(CtiMode mode) {
  switch (mode) {
    case CtiMode::MixedEdges: return "mixed";
    case CtiMode::Snapshots: return "snapshots";
    case CtiMode::SpatialTemporal: return "spatial-temporal";
  }
  return "?";
}

std::optional<CtiMode> parse_cti_mode(std::string_view text) {
  if (text == "mixed") return CtiMode::MixedEdges;
  if (text == "snapshots") return CtiMode::Snapshots;
  if (text == "spatial-temporal") return CtiMode::SpatialTemporal;
  return std::nullopt;
}

std::string_view to_string(CtiEndpoints endpoints) {
  return endpoints == CtiEndpoints::HalfOpen ? "half-open" : "closed";
}

std::optional<CtiEndpoints> parse_cti_endpoints(std::string_view text) {
  if (text == "half-open") return CtiEndpoints::HalfOpen;
  if (text == "closed") return CtiEndpoints::Closed;
  return std::nullopt;
}

Tvg from_cti(std::span<const CtiInterval> intervals, const CtiOptions& options) {
  std::vector<double> instants;
  instants.reserve(2 * intervals.size());
  std::size_t node_count = 0;
  for (const auto& iv : intervals) {
    if (!std::isfinite(iv.t_open) || !std::isfinite(iv.t_close)) {
      throw ModelError("interval endpoints must be finite");
    }
    if (!(iv.t_open < iv.t_close)) {
      throw ModelError("interval (" + format_time_value(iv.t_open) + ", " +
                       format_time_value(iv.t_close) + "] has no positive measure");
    }
    if (iv.u == iv.v) {
      throw ModelError("interval contact pairs node " + std::to_string(iv.u.value) +
                       " with itself");
    }
    instants.push_back(iv.t_open);
    instants.push_back(iv.t_close);
    node_count = std::max<std::size_t>({node_count, iv.u.value + 1u, iv.v.value + 1u});
  }
  std::sort(instants.begin(), instants.end());
  instants.erase(std::unique(instants.begin(), instants.end()), instants.end());

  std::vector<std::string> labels;
  labels.reserve(instants.size());
  for (double t : instants) labels.push_back(format_time_value(t));

  Tvg result(options.node_count.value_or(node_count), std::move(labels));
  auto index_of = [&](double t) {
    return static_cast<std::size_t>(std::lower_bound(instants.begin(), instants.end(), t) -
                                    instants.begin());
  };

  for (const auto& iv : intervals) {
    const std::size_t open = index_of(iv.t_open);
    const std::size_t close = index_of(iv.t_close);
    if (options.mode == CtiMode::MixedEdges) {
      const TimeId a{checked_index(open)};
      const TimeId b{checked_index(close)};
      result.try_add_edge({iv.u, a, iv.v, b});
      if (iv.bidirectional) result.try_add_edge({iv.v, a, iv.u, b});
      continue;
    }

    const std::size_t first = options.endpoints == CtiEndpoints::HalfOpen ? open + 1 : open;
    for (std::size_t k = first; k <= close; ++k) {
      const TimeId t{checked_index(k)};
      result.try_add_edge({iv.u, t, iv.v, t});
      if (iv.bidirectional) result.try_add_edge({iv.v, t, iv.u, t});
      if (options.mode == CtiMode::SpatialTemporal && k < close) {
        const TimeId next{checked_index(k + 1)};
        result.try_add_edge({iv.u, t, iv.u, next});
        result.try_add_edge({iv.v, t, iv.v, next});
      }
    }
  }
  return result;
}

Tvg from_ste(std::span<const SteContact> contacts, std::span<const SteWait> waits,
             const ImportOptions& options) {
  std::vector<LabeledEdge> edges;
  std::vector<std::string> referenced;
  edges.reserve(contacts.size() + waits.size());
  for (const auto& c : contacts) {
    if (c.u == c.v) {
      throw ModelError("contact at '" + c.time + "' pairs node " + std::to_string(c.u.value) +
                       " with itself");
    }
    edges.push_back({c.u.value, c.time, c.v.value, c.time});
    referenced.push_back(c.time);
  }
  for (const auto& w : waits) {
    if (w.from == w.to) {
      throw ModelError("wait of node " + std::to_string(w.node.value) + " at '" + w.from +
                       "' spans no time");
    }
    edges.push_back({w.node.value, w.from, w.node.value, w.to});
    referenced.push_back(w.from);
    referenced.push_back(w.to);
  }

  LabeledBuildOptions build = build_options(options, referenced);
  build.merge_duplicates = true;
  Tvg result = build_tvg(edges, build);
  for (const auto& e : result.edges()) {
    if (classify(e).orientation == Orientation::Regressive) {
      throw ModelError("wait of node " + std::to_string(e.origin_node.value) + " from '" +
                       result.time_label(e.origin_time) + "' to '" +
                       result.time_label(e.dest_time) + "' runs backwards in time");
    }
  }
  return result;
}

Tvg from_tme(std::span<const LabeledEdge> edges, const ImportOptions& options) {
  std::vector<std::string> referenced;
  referenced.reserve(2 * edges.size());
  for (const auto& e : edges) {
    if (e.origin_time == e.dest_time) {
      throw ModelError("edge (" + std::to_string(e.origin_node) + ", " + e.origin_time + ", " +
                       std::to_string(e.dest_node) + ", " + e.dest_time +
                       ") is contemporaneous; TME admits only temporal and mixed edges");
    }
    referenced.push_back(e.origin_time);
    referenced.push_back(e.dest_time);
  }

  Tvg result = build_tvg(edges, build_options(options, referenced));
  for (const auto& e : result.edges()) {
    if (classify(e).orientation == Orientation::Regressive) {
      throw ModelError("edge from '" + result.time_label(e.origin_time) + "' to '" +
                       result.time_label(e.dest_time) + "' is regressive; TME admits none");
    }
  }
  return result;
}

std::string_view to_string(ModelClass model) {
  switch (model) {
    case ModelClass::Snapshot: return "Snapshot";
    case ModelClass::CTI: return "CTI";
    case ModelClass::STE: return "STE";
    case ModelClass::TME: return "TME";
    case ModelClass::Unifying: return "Unifying";
  }
  return "?";
}

std::optional<ModelClass> parse_model_class(std::string_view text) {
  for (ModelClass m : kAllModelClasses) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

namespace {

// Output shape of the CTI spatial-temporal discretization: every waiting
// edge joins consecutive instants and both of its temporal nodes take part
// in a contact.
bool has_cti_waiting_shape(const Tvg& tvg) {
  const Companion c = tvg.companion();
  std::vector<bool> in_contact(c.temporal_nodes(), false);
  for (const auto& e : tvg.edges()) {
    if (classify(e).kind != EdgeKind::Spatial) continue;
    in_contact[std::size_t{e.origin_time.index} * c.nodes + e.origin_node.value] = true;
    in_contact[std::size_t{e.dest_time.index} * c.nodes + e.dest_node.value] = true;
  }
  for (const auto& e : tvg.edges()) {
    if (classify(e).kind != EdgeKind::Temporal) continue;
    if (e.dest_time.index != e.origin_time.index + 1) return false;
    if (!in_contact[std::size_t{e.origin_time.index} * c.nodes + e.origin_node.value] ||
        !in_contact[std::size_t{e.dest_time.index} * c.nodes + e.dest_node.value]) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::set<ModelClass> detect_class(const Tvg& tvg) {
  bool regressive = false;
  bool all_spatial = true;
  bool all_spatial_temporal = true;
  bool all_temporal_mixed = true;
  bool all_mixed = true;
  for (const auto& e : tvg.edges()) {
    const EdgeClass ec = classify(e);
    regressive |= ec.orientation == Orientation::Regressive;
    all_spatial &= ec.kind == EdgeKind::Spatial;
    all_spatial_temporal &= ec.kind == EdgeKind::Spatial || ec.kind == EdgeKind::Temporal;
    all_temporal_mixed &= ec.kind == EdgeKind::Temporal || ec.kind == EdgeKind::Mixed;
    all_mixed &= ec.kind == EdgeKind::Mixed;
  }

  std::set<ModelClass> classes{ModelClass::Unifying};
  if (regressive) return classes;
  if (all_spatial) classes.insert(ModelClass::Snapshot);
  if (all_spatial_temporal) classes.insert(ModelClass::STE);
  if (all_temporal_mixed) classes.insert(ModelClass::TME);
  if (all_mixed || all_spatial || (all_spatial_temporal && has_cti_waiting_shape(tvg))) {
    classes.insert(ModelClass::CTI);
  }
  return classes;
}

bool can_represent(ModelClass src, ModelClass dst) {
  // rows: representing class; columns: represented class
  // order: Snapshot, CTI, STE, TME, Unifying
  static constexpr bool kMap[5][5] = {
      {true, true, false, false, false},   // Snapshot
      {true, true, true, false, false},    // CTI
      {true, true, true, false, false},    // STE
      {false, true, false, true, false},   // TME
      {true, true, true, true, true},      // Unifying
  };
  return kMap[static_cast<int>(src)][static_cast<int>(dst)];
}

}  // namespace tvg
