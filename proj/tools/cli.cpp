#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "tvg/algebra.hpp"
#include "tvg/analysis.hpp"
#include "tvg/classify.hpp"
#include "tvg/convert.hpp"
#include "tvg/error.hpp"
#include "tvg/io.hpp"

namespace tvg::cli {

namespace {

// Raised for bad paths and flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw UsageError("cannot open input '" + path + "'");
    stream_ = file_.get();
  }
  std::istream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& stdout_stream) {
    if (path.empty() || path == "-") {
      stream_ = &stdout_stream;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw TvgError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

Tvg load_tvg(const std::string& path, std::istream& in) {
  Input input(path, in);
  return read_tvg(input.stream());
}

TemporalNode parse_source(const std::string& text, const Tvg& tvg) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--source expects <node>,<time label>");
  const std::string node_text = text.substr(0, comma);
  const std::string label = text.substr(comma + 1);
  std::size_t node = 0;
  try {
    std::size_t used = 0;
    node = std::stoul(node_text, &used);
    if (used != node_text.size()) throw std::invalid_argument(node_text);
  } catch (const std::exception&) {
    throw UsageError("--source node '" + node_text + "' is not a node id");
  }
  auto t = tvg.find_time(label);
  if (!t) throw UsageError("--source time '" + label + "' is not an instant of the graph");
  if (node >= tvg.node_count()) throw UsageError("--source node " + node_text + " out of range");
  return {NodeId{static_cast<std::uint32_t>(node)}, *t};
}

std::string class_list(const std::set<ModelClass>& classes) {
  std::string text;
  for (ModelClass m : kAllModelClasses) {
    if (!classes.contains(m)) continue;
    if (!text.empty()) text += ' ';
    text += to_string(m);
  }
  return text;
}

void print_stats(const Tvg& tvg, std::ostream& out) {
  std::size_t spatial = 0, self_loop = 0;
  std::size_t temporal_prog = 0, temporal_regr = 0, mixed_prog = 0, mixed_regr = 0;
  for (const auto& e : tvg.edges()) {
    const EdgeClass c = classify(e);
    const bool prog = c.orientation == Orientation::Progressive;
    switch (c.kind) {
      case EdgeKind::Spatial: ++spatial; break;
      case EdgeKind::SelfLoop: ++self_loop; break;
      case EdgeKind::Temporal: ++(prog ? temporal_prog : temporal_regr); break;
      case EdgeKind::Mixed: ++(prog ? mixed_prog : mixed_regr); break;
    }
  }
  const Partition p = partition(tvg);
  const StorageReport storage = storage_report(tvg);

  out << "nodes " << tvg.node_count() << '\n'
      << "times " << tvg.time_count() << '\n'
      << "edges " << tvg.edge_count() << '\n'
      << "spatial " << spatial << '\n'
      << "temporal_progressive " << temporal_prog << '\n'
      << "temporal_regressive " << temporal_regr << '\n'
      << "mixed_progressive " << mixed_prog << '\n'
      << "mixed_regressive " << mixed_regr << '\n'
      << "self_loop " << self_loop << '\n'
      << "connected_nodes " << p.connected_nodes.size() << '\n'
      << "disconnected_nodes " << p.disconnected_nodes.size() << '\n'
      << "used_times " << p.used_times.size() << '\n'
      << "unused_times " << p.unused_times.size() << '\n'
      << "storage_edge_items " << storage.edge_items << '\n'
      << "storage_disconnected_node_items " << storage.disconnected_node_items << '\n'
      << "storage_unused_time_items " << storage.unused_time_items << '\n'
      << "storage_total_items " << storage.total_items << '\n'
      << "regressive " << (has_regressive(tvg) ? "yes" : "no") << '\n'
      << "cyclic " << (is_cyclic(tvg) ? "yes" : "no") << '\n'
      << "cyclic_ignoring_spatial_pairs "
      << (is_cyclic(tvg, {.ignore_spatial_pairs = true}) ? "yes" : "no") << '\n'
      << "model_classes " << class_list(detect_class(tvg)) << '\n';
}

void print_block_report(const BlockReport& report, std::ostream& out) {
  out << "# spatial_nnz " << report.spatial_nnz << '\n'
      << "# progressive_nnz " << report.progressive_nnz << '\n'
      << "# regressive_nnz " << report.regressive_nnz << '\n';
  for (std::size_t a = 0; a < report.times; ++a) {
    out << "# block_row " << a;
    for (std::size_t b = 0; b < report.times; ++b) out << ' ' << report.block(a, b);
    out << '\n';
  }
}

void print_edge_classes(const Tvg& tvg, std::ostream& out) {
  for (const auto& e : tvg.edges()) {
    const EdgeClass c = classify(e);
    out << e.origin_node.value << ' ' << tvg.time_label(e.origin_time) << ' '
        << e.dest_node.value << ' ' << tvg.time_label(e.dest_time) << ' ' << to_string(c.kind)
        << ' ' << to_string(c.orientation) << '\n';
  }
}

// Structural self-checks on one graph. Returns the number of failures.
int run_checks(const Tvg& tvg, std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "ok " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };

  bool reflexive = true, unifying_row = true, unifying_only = true;
  for (ModelClass a : kAllModelClasses) {
    reflexive &= can_represent(a, a);
    unifying_row &= can_represent(ModelClass::Unifying, a);
    if (a != ModelClass::Unifying) unifying_only &= !can_represent(a, ModelClass::Unifying);
  }
  report("table1_reflexive", reflexive);
  report("table1_unifying_represents_all", unifying_row);
  report("table1_only_unifying_represents_unifying", unifying_only);

  const auto classes = detect_class(tvg);
  bool classes_ok = classes.contains(ModelClass::Unifying);
  for (ModelClass c : classes) classes_ok &= can_represent(ModelClass::Unifying, c);
  if (has_regressive(tvg)) classes_ok &= classes.size() == 1;
  report("model_classes_consistent", classes_ok);

  const Partition p = partition(tvg);
  report("partition_covers_nodes",
         p.connected_nodes.size() + p.disconnected_nodes.size() == tvg.node_count());
  report("partition_covers_times", p.used_times.size() + p.unused_times.size() == tvg.time_count());

  const StorageReport storage = storage_report(tvg);
  report("storage_total_items", storage.total_items == tvg.edge_count() +
                                                           p.disconnected_nodes.size() +
                                                           p.unused_times.size());

  const SparseMatrix adjacency = adjacency_matrix(tvg);
  report("adjacency_nnz_equals_edges", adjacency.nnz() == tvg.edge_count());
  report("refold_roundtrip",
         refold(adjacency, tvg.companion(),
                std::vector<std::string>(tvg.time_labels().begin(), tvg.time_labels().end())) ==
             tvg);

  const StaticDigraph digraph = to_static_digraph(tvg);
  bool iso = digraph.arcs().size() == adjacency.nnz();
  for (const auto& arc : digraph.arcs()) iso &= adjacency.at(arc.from, arc.to) == arc.weight;
  report("digraph_matches_adjacency", iso);

  const BlockReport blocks = block_report(adjacency, tvg.companion());
  std::size_t contemporaneous = 0, progressive = 0, regressive = 0;
  for (const auto& e : tvg.edges()) {
    switch (classify(e).orientation) {
      case Orientation::Contemporaneous: ++contemporaneous; break;
      case Orientation::Progressive: ++progressive; break;
      case Orientation::Regressive: ++regressive; break;
    }
  }
  report("blocks_match_classes", blocks.spatial_nnz == contemporaneous &&
                                     blocks.progressive_nnz == progressive &&
                                     blocks.regressive_nnz == regressive);

  const bool self_loops = std::any_of(tvg.edges().begin(), tvg.edges().end(), [](const auto& e) {
    return classify(e).kind == EdgeKind::SelfLoop;
  });
  if (self_loops) {
    out << "skip incidence_columns (self-loop present)\n";
  } else {
    const SparseMatrix incidence = incidence_matrix(tvg);
    std::vector<double> sums(incidence.cols(), 0.0);
    std::vector<std::size_t> counts(incidence.cols(), 0);
    for (const auto& e : incidence.entries()) {
      sums[e.col] += e.value;
      ++counts[e.col];
    }
    report("incidence_columns",
           std::all_of(sums.begin(), sums.end(), [](double s) { return s == 0.0; }) &&
               std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 2; }));
  }

  std::stringstream buffer;
  write_tvg(tvg, buffer);
  report("io_roundtrip", read_tvg(buffer) == tvg);

  out << (failures == 0 ? "check passed" : "check failed") << '\n';
  return failures;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-varying graph toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string input = "-";
  std::string output;

  auto* convert = app.add_subcommand("convert", "Import a prior-model file as a TVG file");
  std::string from;
  std::string cti_mode = "mixed";
  std::string cti_endpoints = "half-open";
  bool waiting = false;
  convert->add_option("--from", from, "Input model class")
      ->required()
      ->check(CLI::IsMember({"snapshots", "cti", "ste", "tme"}));
  convert->add_option("--cti-mode", cti_mode, "CTI discretization")
      ->check(CLI::IsMember({"mixed", "snapshots", "spatial-temporal"}));
  convert->add_option("--cti-endpoints", cti_endpoints, "Instants an interval covers")
      ->check(CLI::IsMember({"half-open", "closed"}));
  convert->add_flag("--waiting", waiting, "Add waiting edges between consecutive instants");

  auto* stats = app.add_subcommand("stats", "Edge classes, partition sizes and storage items");

  auto* matrix = app.add_subcommand("matrix", "Export the adjacency or incidence matrix");
  std::string kind;
  bool blocks = false;
  matrix->add_option("--kind", kind, "Matrix form")
      ->required()
      ->check(CLI::IsMember({"adjacency", "incidence"}));
  matrix->add_flag("--blocks", blocks, "Append the time-block report as # lines");

  auto* reach = app.add_subcommand("reach", "Temporal nodes reachable from a source");
  std::string source;
  reach->add_option("--source", source, "Source temporal node as <node>,<time label>")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Class and orientation of every edge");
  auto* check = app.add_subcommand("check", "Run the structural self-checks on a graph");

  for (auto* sub : {convert, stats, matrix, reach, classify_cmd, check}) {
    sub->add_option("input", input, "Input file, '-' for standard input");
    sub->add_option("-o,--output", output, "Output file (default: standard output)");
  }

  std::vector<std::string> argv_storage{"tvg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (convert->parsed()) {
      Input src(input, in);
      Tvg result;
      if (from == "snapshots") {
        result = from_snapshots(read_snapshots(src.stream()));
      } else if (from == "cti") {
        CtiInput cti = read_cti(src.stream());
        CtiOptions options;
        options.mode = *parse_cti_mode(cti_mode);
        options.endpoints = *parse_cti_endpoints(cti_endpoints);
        options.node_count = cti.node_count;
        result = from_cti(cti.intervals, options);
      } else if (from == "ste") {
        SteInput ste = read_ste(src.stream());
        result = from_ste(ste.contacts, ste.waits, ste.options);
      } else {
        TmeInput tme = read_tme(src.stream());
        result = from_tme(tme.edges, tme.options);
      }
      if (waiting) result = add_waiting_edges(result);
      Output dst(output, out);
      write_tvg(result, dst.stream());
      dst.finish();
      return kOk;
    }

    const Tvg tvg = load_tvg(input, in);
    Output dst(output, out);
    int status = kOk;
    if (stats->parsed()) {
      print_stats(tvg, dst.stream());
    } else if (matrix->parsed()) {
      if (kind == "adjacency") {
        const SparseMatrix m = adjacency_matrix(tvg);
        write_matrix(m, dst.stream());
        if (blocks) print_block_report(block_report(m, tvg.companion()), dst.stream());
      } else {
        if (blocks) throw UsageError("--blocks applies to the adjacency matrix only");
        write_matrix(incidence_matrix(tvg), dst.stream());
      }
    } else if (reach->parsed()) {
      const ReachSet r = reachable(tvg, parse_source(source, tvg));
      dst.stream() << "# source " << r.source.node.value << ' ' << tvg.time_label(r.source.time)
                   << '\n'
                   << "# reached " << r.reached.size() << '\n';
      for (const auto& tn : r.reached) {
        dst.stream() << tn.node.value << ' ' << tvg.time_label(tn.time) << '\n';
      }
    } else if (classify_cmd->parsed()) {
      print_edge_classes(tvg, dst.stream());
    } else if (check->parsed()) {
      if (run_checks(tvg, dst.stream()) != 0) status = kModelViolation;
    }
    dst.finish();
    return status;
  } catch (const UsageError& e) {
    err << "tvg: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "tvg: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ModelError& e) {
    err << "tvg: model violation: " << e.what() << '\n';
    return kModelViolation;
  } catch (const TvgError& e) {
    err << "tvg: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace tvg::cli
