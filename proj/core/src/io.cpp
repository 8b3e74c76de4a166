#include "tvg/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "tvg/classify.hpp"
#include "tvg/error.hpp"
#include "tvg/time_order.hpp"

namespace tvg {

namespace {

// Whitespace-split tokens of one line, cut at the first token that starts
// with '#'.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string token;
  while (ss >> token) {
    if (token.front() == '#') break;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

// Calls fn(tokens, line_no) for every non-empty line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens.empty()) fn(tokens, line_no);
  }
  if (in.bad()) throw TvgError("read failed");
}

std::size_t parse_count(const std::string& token, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line_no);
  }
  return value;
}

NodeId parse_node(const std::string& token, std::size_t line_no) {
  std::size_t value = parse_count(token, line_no, "node id");
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError("node id " + token + " exceeds 32-bit range", line_no);
  }
  return NodeId{static_cast<std::uint32_t>(value)};
}

double parse_real(const std::string& token, std::size_t line_no, const char* what) {
  auto value = parse_time_value(token);
  if (!value) throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line_no);
  return *value;
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t min, std::size_t max,
                  std::size_t line_no, const char* record) {
  if (tokens.size() < min || tokens.size() > max) {
    throw ParseError(std::string("malformed ") + record + " record (" +
                         std::to_string(tokens.size()) + " fields)",
                     line_no);
  }
}

// Header directives shared by the model-class input files.
struct Directives {
  std::optional<std::size_t> node_count;
  std::optional<TimeOrdering> ordering;
  std::vector<std::string> sequence;

  bool consume(const std::vector<std::string>& tokens, std::size_t line_no) {
    if (tokens[0] == "nodes") {
      expect_arity(tokens, 2, 2, line_no, "nodes");
      node_count = parse_count(tokens[1], line_no, "node count");
      return true;
    }
    if (tokens[0] == "order") {
      expect_arity(tokens, 2, 2, line_no, "order");
      ordering = parse_time_ordering(tokens[1]);
      if (!ordering) throw ParseError("unknown time order '" + tokens[1] + "'", line_no);
      return true;
    }
    if (tokens[0] == "sequence") {
      sequence.assign(tokens.begin() + 1, tokens.end());
      if (!ordering) ordering = TimeOrdering::Declared;
      return true;
    }
    return false;
  }

  ImportOptions import_options() const {
    ImportOptions options;
    options.node_count = node_count;
    options.ordering = ordering;
    options.time_labels = sequence;
    if (options.ordering == TimeOrdering::Declared && sequence.empty()) {
      throw ParseError("order declared requires a sequence line");
    }
    return options;
  }
};

void check_label_writable(const std::string& label) {
  const bool bad = label.empty() || label.front() == '#' || label.front() == '[' ||
                   std::any_of(label.begin(), label.end(),
                               [](unsigned char c) { return std::isspace(c) != 0; });
  if (bad) throw ModelError("time label '" + label + "' cannot be written as a single token");
}

void write_weight(std::ostream& out, double weight) {
  if (weight != 1.0) out << ' ' << format_time_value(weight);
}

void check_stream(const std::ostream& out) {
  if (!out) throw TvgError("write failed");
}

}  // namespace

void write_tvg(const Tvg& tvg, std::ostream& out) {
  for (const auto& label : tvg.time_labels()) check_label_writable(label);

  TimeOrdering ordering = TimeOrdering::Declared;
  if (tvg.time_count() > 0 && is_strictly_ordered(tvg.time_labels(), TimeOrdering::Numeric)) {
    ordering = TimeOrdering::Numeric;
  } else if (is_strictly_ordered(tvg.time_labels(), TimeOrdering::Natural)) {
    ordering = TimeOrdering::Natural;
  }

  const Partition p = partition(tvg);
  out << "[meta]\n";
  out << "nodes " << tvg.node_count() << '\n';
  out << "times " << tvg.time_count() << '\n';
  out << "order " << to_string(ordering) << '\n';
  if (ordering == TimeOrdering::Declared) {
    out << "sequence";
    for (const auto& label : tvg.time_labels()) out << ' ' << label;
    out << '\n';
  }
  out << "[unused]\n";
  for (NodeId u : p.disconnected_nodes) out << "node " << u.value << '\n';
  for (TimeId t : p.unused_times) out << "time " << tvg.time_label(t) << '\n';
  out << "[edges]\n";
  for (const auto& e : tvg.edges()) {
    out << e.origin_node.value << ' ' << tvg.time_label(e.origin_time) << ' ' << e.dest_node.value
        << ' ' << tvg.time_label(e.dest_time);
    write_weight(out, e.weight);
    out << '\n';
  }
  check_stream(out);
}

Tvg read_tvg(std::istream& in) {
  enum class Section { None, Meta, Unused, Edges };
  Section section = Section::None;
  std::set<std::string> seen_sections;

  std::optional<std::size_t> declared_nodes;
  std::optional<std::size_t> declared_times;
  std::optional<TimeOrdering> ordering;
  std::vector<std::string> sequence;
  bool have_sequence = false;
  std::map<std::uint32_t, std::size_t> unused_nodes;  // id -> line
  std::map<std::string, std::size_t> unused_times;    // label -> line
  std::vector<LabeledEdge> edges;
  std::vector<std::size_t> edge_lines;

  for_each_record(in, [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    const std::string& head = tokens[0];
    if (head.front() == '[') {
      if (tokens.size() != 1) throw ParseError("trailing text after section marker", line_no);
      if (head == "[meta]") {
        section = Section::Meta;
      } else if (head == "[unused]") {
        section = Section::Unused;
      } else if (head == "[edges]") {
        section = Section::Edges;
      } else {
        throw ParseError("unknown section " + head, line_no);
      }
      if (!seen_sections.insert(head).second) throw ParseError("repeated section " + head, line_no);
      return;
    }

    switch (section) {
      case Section::Meta:
        if (head == "nodes") {
          expect_arity(tokens, 2, 2, line_no, "nodes");
          declared_nodes = parse_count(tokens[1], line_no, "node count");
        } else if (head == "times") {
          expect_arity(tokens, 2, 2, line_no, "times");
          declared_times = parse_count(tokens[1], line_no, "time count");
        } else if (head == "order") {
          expect_arity(tokens, 2, 2, line_no, "order");
          ordering = parse_time_ordering(tokens[1]);
          if (!ordering) throw ParseError("unknown time order '" + tokens[1] + "'", line_no);
        } else if (head == "sequence") {
          sequence.assign(tokens.begin() + 1, tokens.end());
          have_sequence = true;
        } else {
          throw ParseError("unknown meta key '" + head + "'", line_no);
        }
        return;
      case Section::Unused:
        expect_arity(tokens, 2, 2, line_no, "unused");
        if (head == "node") {
          if (!unused_nodes.emplace(parse_node(tokens[1], line_no).value, line_no).second) {
            throw ParseError("node " + tokens[1] + " declared unused twice", line_no);
          }
        } else if (head == "time") {
          if (!unused_times.emplace(tokens[1], line_no).second) {
            throw ParseError("time " + tokens[1] + " declared unused twice", line_no);
          }
        } else {
          throw ParseError("unused record must be 'node <id>' or 'time <label>'", line_no);
        }
        return;
      case Section::None:  // a bare edge list
      case Section::Edges: {
        expect_arity(tokens, 4, 5, line_no, "edge");
        LabeledEdge e;
        e.origin_node = parse_node(tokens[0], line_no).value;
        e.origin_time = tokens[1];
        e.dest_node = parse_node(tokens[2], line_no).value;
        e.dest_time = tokens[3];
        if (tokens.size() == 5) e.weight = parse_real(tokens[4], line_no, "weight");
        edges.push_back(std::move(e));
        edge_lines.push_back(line_no);
        return;
      }
    }
  });

  // Instants referenced by edges.
  std::set<std::string> used_times;
  std::set<std::uint32_t> used_nodes;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (const std::string* label : {&edges[k].origin_time, &edges[k].dest_time}) {
      used_times.insert(*label);
      if (unused_times.contains(*label)) {
        throw ParseError("time " + *label + " is declared unused but carries an edge",
                         edge_lines[k]);
      }
    }
    for (std::size_t u : {edges[k].origin_node, edges[k].dest_node}) {
      used_nodes.insert(static_cast<std::uint32_t>(u));
      if (unused_nodes.contains(static_cast<std::uint32_t>(u))) {
        throw ParseError("node " + std::to_string(u) + " is declared unused but carries an edge",
                         edge_lines[k]);
      }
    }
  }

  // T, in order.
  std::vector<std::string> labels;
  if (have_sequence && !ordering) ordering = TimeOrdering::Declared;
  if (ordering == TimeOrdering::Declared) {
    if (!have_sequence) throw ParseError("order declared requires a sequence line");
    labels = sequence;
    std::set<std::string> declared(labels.begin(), labels.end());
    if (declared.size() != labels.size()) throw ParseError("repeated label in time sequence");
    for (const auto& label : used_times) {
      if (!declared.contains(label)) {
        throw ParseError("time label '" + label + "' has no position in the declared sequence");
      }
    }
    for (const auto& [label, line_no] : unused_times) {
      if (!declared.contains(label)) {
        throw ParseError("time label '" + label + "' has no position in the declared sequence",
                         line_no);
      }
    }
    for (const auto& label : labels) {
      if (!used_times.contains(label) && !unused_times.contains(label)) {
        throw ParseError("time " + label + " is neither used nor declared unused");
      }
    }
  } else {
    if (have_sequence) throw ParseError("a sequence line requires order declared");
    std::vector<std::string> all(used_times.begin(), used_times.end());
    for (const auto& [label, line_no] : unused_times) all.push_back(label);
    const TimeOrdering rule = ordering.value_or(infer_ordering(all));
    try {
      labels = sort_labels(std::move(all), rule);
    } catch (const ModelError& e) {
      throw ParseError(e.what());
    }
  }
  if (declared_times && *declared_times != labels.size()) {
    throw ParseError("header declares " + std::to_string(*declared_times) +
                     " instants, records define " + std::to_string(labels.size()));
  }

  // V = connected ∪ declared disconnected, which must be exactly 0..|V|-1.
  // A bare edge list leaves the gaps implicit.
  std::set<std::uint32_t> nodes(used_nodes);
  for (const auto& [u, line_no] : unused_nodes) nodes.insert(u);
  const std::size_t node_count =
      declared_nodes.value_or(nodes.empty() ? 0 : std::size_t{*nodes.rbegin()} + 1);
  if (!nodes.empty() && *nodes.rbegin() >= node_count) {
    throw ParseError("node " + std::to_string(*nodes.rbegin()) + " outside declared node count " +
                     std::to_string(node_count));
  }
  if (!seen_sections.empty() && nodes.size() != node_count) {
    std::uint32_t missing = 0;
    while (nodes.contains(missing)) ++missing;
    throw ParseError("node " + std::to_string(missing) +
                     " is neither connected nor declared unused");
  }

  Tvg result(node_count, std::move(labels));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    try {
      result.add_edge(
          result.make_edge(e.origin_node, e.origin_time, e.dest_node, e.dest_time, e.weight));
    } catch (const ModelError& err) {
      throw ModelError("line " + std::to_string(edge_lines[k]) + ": " + err.what());
    }
  }
  return result;
}

StorageReport storage_report(const Tvg& tvg) {
  const Partition p = partition(tvg);
  StorageReport r;
  r.edge_items = tvg.edge_count();
  r.disconnected_node_items = p.disconnected_nodes.size();
  r.unused_time_items = p.unused_times.size();
  r.total_items = r.edge_items + r.disconnected_node_items + r.unused_time_items;
  return r;
}

void write_matrix(const SparseMatrix& m, std::ostream& out) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (const auto& e : m.entries()) {
    out << e.row << ' ' << e.col << ' ' << format_time_value(e.value) << '\n';
  }
  check_stream(out);
}

SparseMatrix read_matrix(std::istream& in) {
  std::optional<std::array<std::size_t, 3>> header;
  std::vector<MatrixEntry> entries;
  for_each_record(in, [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    expect_arity(tokens, 3, 3, line_no, header ? "matrix entry" : "matrix header");
    if (!header) {
      header = {parse_count(tokens[0], line_no, "row count"),
                parse_count(tokens[1], line_no, "column count"),
                parse_count(tokens[2], line_no, "nonzero count")};
      return;
    }
    entries.push_back({parse_count(tokens[0], line_no, "row"),
                       parse_count(tokens[1], line_no, "column"),
                       parse_real(tokens[2], line_no, "value")});
  });
  if (!header) throw ParseError("missing matrix header");
  if (entries.size() != (*header)[2]) {
    throw ParseError("header declares " + std::to_string((*header)[2]) + " nonzeros, found " +
                     std::to_string(entries.size()));
  }
  try {
    return SparseMatrix::from_entries((*header)[0], (*header)[1], std::move(entries));
  } catch (const ModelError& e) {
    throw ParseError(e.what());
  }
}

SnapshotSequence read_snapshots(std::istream& in) {
  Directives directives;
  SnapshotSequence sequence;
  std::size_t max_node_plus_one = 0;
  for_each_record(in, [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    if (tokens[0] == "snapshot") {
      expect_arity(tokens, 2, 2, line_no, "snapshot");
      sequence.snapshots.push_back({tokens[1], {}});
      return;
    }
    if (tokens[0] == "nodes") {
      directives.consume(tokens, line_no);
      return;
    }
    expect_arity(tokens, 2, 2, line_no, "pair");
    if (sequence.snapshots.empty()) throw ParseError("pair before any snapshot header", line_no);
    NodeId u = parse_node(tokens[0], line_no);
    NodeId v = parse_node(tokens[1], line_no);
    max_node_plus_one = std::max<std::size_t>({max_node_plus_one, u.value + 1u, v.value + 1u});
    sequence.snapshots.back().pairs.emplace_back(u, v);
  });
  sequence.node_count = directives.node_count.value_or(max_node_plus_one);
  return sequence;
}

CtiInput read_cti(std::istream& in) {
  Directives directives;
  CtiInput input;
  for_each_record(in, [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    if (tokens[0] == "nodes") {
      directives.consume(tokens, line_no);
      return;
    }
    expect_arity(tokens, 4, 5, line_no, "interval");
    CtiInterval iv;
    iv.u = parse_node(tokens[0], line_no);
    iv.v = parse_node(tokens[1], line_no);
    iv.t_open = parse_real(tokens[2], line_no, "interval start");
    iv.t_close = parse_real(tokens[3], line_no, "interval end");
    if (tokens.size() == 5) {
      if (tokens[4] == "bidir") {
        iv.bidirectional = true;
      } else if (tokens[4] == "directed") {
        iv.bidirectional = false;
      } else {
        throw ParseError("interval flag must be 'bidir' or 'directed'", line_no);
      }
    }
    input.intervals.push_back(iv);
  });
  input.node_count = directives.node_count;
  return input;
}

SteInput read_ste(std::istream& in) {
  Directives directives;
  SteInput input;
  for_each_record(in, [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    if (directives.consume(tokens, line_no)) return;
    if (tokens[0] == "contact") {
      expect_arity(tokens, 4, 4, line_no, "contact");
      input.contacts.push_back(
          {parse_node(tokens[1], line_no), parse_node(tokens[2], line_no), tokens[3]});
    } else if (tokens[0] == "wait") {
      expect_arity(tokens, 4, 4, line_no, "wait");
      input.waits.push_back({parse_node(tokens[1], line_no), tokens[2], tokens[3]});
    } else {
      throw ParseError("expected 'contact' or 'wait' record, got '" + tokens[0] + "'", line_no);
    }
  });
  input.options = directives.import_options();
  return input;
}

TmeInput read_tme(std::istream& in) {
  Directives directives;
  TmeInput input;
  for_each_record(in, [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    if (directives.consume(tokens, line_no)) return;
    expect_arity(tokens, 4, 5, line_no, "edge");
    LabeledEdge e;
    e.origin_node = parse_node(tokens[0], line_no).value;
    e.origin_time = tokens[1];
    e.dest_node = parse_node(tokens[2], line_no).value;
    e.dest_time = tokens[3];
    if (tokens.size() == 5) e.weight = parse_real(tokens[4], line_no, "weight");
    input.edges.push_back(std::move(e));
  });
  input.options = directives.import_options();
  return input;
}

}  // namespace tvg
