#include "tvg/tvg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "tvg/error.hpp"

namespace tvg {

Tvg::Tvg(std::size_t node_count, std::vector<std::string> time_labels)
    : node_count_(node_count), time_labels_(std::move(time_labels)) {
  if (node_count_ > std::numeric_limits<std::uint32_t>::max() ||
      time_labels_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ModelError("node or time count exceeds 32-bit index range");
  }
  time_lookup_.reserve(time_labels_.size());
  for (std::size_t k = 0; k < time_labels_.size(); ++k) {
    auto [it, inserted] =
        time_lookup_.emplace(time_labels_[k], TimeId{static_cast<std::uint32_t>(k)});
    if (!inserted) throw ModelError("duplicate time label '" + time_labels_[k] + "'");
  }
}

const std::string& Tvg::time_label(TimeId t) const {
  if (!in_range(t)) throw ModelError("time index " + std::to_string(t.index) + " out of range");
  return time_labels_[t.index];
}

std::optional<TimeId> Tvg::find_time(std::string_view label) const {
  auto it = time_lookup_.find(std::string(label));
  if (it == time_lookup_.end()) return std::nullopt;
  return it->second;
}

TimeId Tvg::time(std::string_view label) const {
  auto t = find_time(label);
  if (!t) throw ModelError("unknown time label '" + std::string(label) + "'");
  return *t;
}

const DynamicEdge* Tvg::find(const DynamicEdge& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? nullptr : &*it;
}

void Tvg::check_range(const DynamicEdge& e) const {
  if (!in_range(e.origin_node) || !in_range(e.dest_node)) {
    throw ModelError("edge node out of range (|V| = " + std::to_string(node_count_) + ")");
  }
  if (!in_range(e.origin_time) || !in_range(e.dest_time)) {
    throw ModelError("edge time out of range (|T| = " + std::to_string(time_labels_.size()) +
                     ")");
  }
  if (e.weight == 0.0 || !std::isfinite(e.weight)) {
    throw ModelError("edge weight must be finite and nonzero");
  }
}

bool Tvg::try_add_edge(const DynamicEdge& e) {
  check_range(e);
  if (!index_.insert(e).second) return false;
  edges_.push_back(e);
  return true;
}

void Tvg::add_edge(const DynamicEdge& e) {
  if (!try_add_edge(e)) {
    throw ModelError("duplicate edge (" + std::to_string(e.origin_node.value) + ", " +
                     time_labels_[e.origin_time.index] + ", " +
                     std::to_string(e.dest_node.value) + ", " +
                     time_labels_[e.dest_time.index] + ")");
  }
}

DynamicEdge Tvg::make_edge(std::size_t u, std::string_view ta, std::size_t v,
                           std::string_view tb, double weight) const {
  if (u > std::numeric_limits<std::uint32_t>::max() ||
      v > std::numeric_limits<std::uint32_t>::max()) {
    throw ModelError("node id exceeds 32-bit index range");
  }
  return DynamicEdge{NodeId{static_cast<std::uint32_t>(u)}, time(ta),
                     NodeId{static_cast<std::uint32_t>(v)}, time(tb), weight};
}

bool operator==(const Tvg& a, const Tvg& b) {
  if (a.node_count_ != b.node_count_ || a.time_labels_ != b.time_labels_ ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  return std::all_of(a.edges_.begin(), a.edges_.end(), [&](const DynamicEdge& e) {
    const DynamicEdge* other = b.find(e);
    return other != nullptr && other->weight == e.weight;
  });
}

Tvg build_tvg(std::span<const LabeledEdge> edges, const LabeledBuildOptions& options) {
  std::vector<std::string> labels;
  if (options.ordering == TimeOrdering::Declared) {
    labels = options.time_labels;
  } else {
    std::set<std::string> distinct(options.time_labels.begin(), options.time_labels.end());
    for (const auto& e : edges) {
      distinct.insert(e.origin_time);
      distinct.insert(e.dest_time);
    }
    labels = sort_labels({distinct.begin(), distinct.end()}, options.ordering);
  }

  std::size_t node_count = 0;
  if (options.node_count) {
    node_count = *options.node_count;
  } else {
    for (const auto& e : edges) node_count = std::max({node_count, e.origin_node + 1, e.dest_node + 1});
  }

  Tvg result(node_count, std::move(labels));
  for (const auto& e : edges) {
    DynamicEdge edge = result.make_edge(e.origin_node, e.origin_time, e.dest_node, e.dest_time,
                                        e.weight);
    if (options.merge_duplicates) {
      result.try_add_edge(edge);
    } else {
      result.add_edge(edge);
    }
  }
  return result;
}

}  // namespace tvg
