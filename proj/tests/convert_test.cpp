#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "tvg/analysis.hpp"
#include "tvg/classify.hpp"
#include "tvg/convert.hpp"
#include "tvg/error.hpp"

using namespace tvg;
using tvg::testing::make_w;
using tvg::testing::time_labels;

namespace {

std::vector<CtiInterval> two_contact_intervals() {
  return {{NodeId{0}, NodeId{1}, 1, 15}, {NodeId{1}, NodeId{2}, 5, 7}};
}

bool has(const Tvg& g, std::size_t u, const char* a, std::size_t v, const char* b) {
  return g.contains(g.make_edge(u, a, v, b));
}

using Classes = std::set<ModelClass>;

}  // namespace

TEST(FromSnapshots, SpatialEdgesPerSnapshot) {
  SnapshotSequence seq{3, {{"t0", {{NodeId{0}, NodeId{1}}}}, {"t1", {{NodeId{1}, NodeId{2}}}}}};
  const Tvg g = from_snapshots(seq);
  EXPECT_EQ(g.companion(), (Companion{3, 2}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(has(g, 0, "t0", 1, "t0"));
  EXPECT_TRUE(has(g, 1, "t1", 2, "t1"));
  EXPECT_EQ(detect_class(g), (Classes{ModelClass::Snapshot, ModelClass::CTI, ModelClass::STE,
                                      ModelClass::Unifying}));
}

TEST(FromSnapshots, Errors) {
  EXPECT_THROW(from_snapshots({2, {{"t0", {{NodeId{1}, NodeId{1}}}}}}), ModelError);
  EXPECT_THROW(from_snapshots({2, {{"t0", {{NodeId{0}, NodeId{2}}}}}}), ModelError);
  EXPECT_THROW(from_snapshots({2, {{"t0", {}}, {"t0", {}}}}), ModelError);
  EXPECT_THROW(from_snapshots({2, {{"t0", {{NodeId{0}, NodeId{1}}, {NodeId{0}, NodeId{1}}}}}}),
               ModelError);
}

TEST(WaitingEdges, AddsMissingLinks) {
  Tvg g(4, time_labels(3));
  g.add_edge(g.make_edge(0, "t0", 3, "t0"));
  const Tvg waited = add_waiting_edges(g);
  EXPECT_EQ(waited.edge_count(), 9u);
  EXPECT_TRUE(has(waited, 2, "t1", 2, "t2"));

  EXPECT_EQ(add_waiting_edges(make_w()), make_w());

  Tvg single(3, time_labels(1));
  single.add_edge(single.make_edge(0, "t0", 1, "t0"));
  EXPECT_EQ(add_waiting_edges(single), single);
}

TEST(FromCti, MixedEdgesMode) {
  const auto intervals = two_contact_intervals();
  const Tvg g = from_cti(intervals, {});
  EXPECT_EQ(std::vector<std::string>(g.time_labels().begin(), g.time_labels().end()),
            (std::vector<std::string>{"1", "5", "7", "15"}));
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(has(g, 0, "1", 1, "15"));
  EXPECT_TRUE(has(g, 1, "1", 0, "15"));
  EXPECT_TRUE(has(g, 1, "5", 2, "7"));
  EXPECT_TRUE(has(g, 2, "5", 1, "7"));
  for (const auto& e : g.edges()) {
    EXPECT_EQ(classify(e), (EdgeClass{EdgeKind::Mixed, Orientation::Progressive}));
  }
  EXPECT_TRUE(detect_class(g).contains(ModelClass::CTI));
  EXPECT_TRUE(detect_class(g).contains(ModelClass::TME));
}

TEST(FromCti, DirectedIntervalEmitsOneDirection) {
  std::vector<CtiInterval> intervals{{NodeId{0}, NodeId{1}, 1, 15, false}};
  const Tvg g = from_cti(intervals, {});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(has(g, 0, "1", 1, "15"));
}

TEST(FromCti, SnapshotsModeHalfOpen) {
  const auto intervals = two_contact_intervals();
  const Tvg g = from_cti(intervals, {.mode = CtiMode::Snapshots});
  EXPECT_FALSE(has(g, 1, "5", 2, "5"));
  EXPECT_TRUE(has(g, 1, "7", 2, "7"));
  EXPECT_TRUE(has(g, 2, "7", 1, "7"));
  EXPECT_FALSE(has(g, 0, "1", 1, "1"));
  for (const char* t : {"5", "7", "15"}) EXPECT_TRUE(has(g, 0, t, 1, t)) << t;
  EXPECT_EQ(g.edge_count(), 8u);
}

TEST(FromCti, SnapshotsModeClosed) {
  const auto intervals = two_contact_intervals();
  const Tvg g = from_cti(intervals, {.mode = CtiMode::Snapshots, .endpoints = CtiEndpoints::Closed});
  EXPECT_TRUE(has(g, 1, "5", 2, "5"));
  EXPECT_TRUE(has(g, 1, "7", 2, "7"));
  for (const char* t : {"1", "5", "7", "15"}) EXPECT_TRUE(has(g, 0, t, 1, t)) << t;
  EXPECT_EQ(g.edge_count(), 12u);
}

TEST(FromCti, SpatialTemporalModeClosed) {
  const auto intervals = two_contact_intervals();
  const Tvg g =
      from_cti(intervals, {.mode = CtiMode::SpatialTemporal, .endpoints = CtiEndpoints::Closed});
  EXPECT_TRUE(has(g, 1, "5", 1, "7"));
  EXPECT_TRUE(has(g, 2, "5", 2, "7"));
  EXPECT_TRUE(has(g, 0, "1", 0, "5"));
  EXPECT_TRUE(has(g, 0, "7", 0, "15"));
  EXPECT_FALSE(has(g, 2, "7", 2, "15"));
  // 12 spatial, node 0 and 1 wait over 3 steps, node 2 over 1 (node 1 shared)
  EXPECT_EQ(g.edge_count(), 12u + 3u + 3u + 1u);
  EXPECT_TRUE(detect_class(g).contains(ModelClass::CTI));
  EXPECT_TRUE(detect_class(g).contains(ModelClass::STE));

  const ReachSet r = reachable(g, {NodeId{0}, g.time("1")});
  EXPECT_NE(std::find(r.reached.begin(), r.reached.end(), TemporalNode{NodeId{2}, g.time("7")}),
            r.reached.end());
}

TEST(FromCti, Errors) {
  std::vector<CtiInterval> empty_measure{{NodeId{0}, NodeId{1}, 3, 3}};
  EXPECT_THROW(from_cti(empty_measure, {}), ModelError);
  std::vector<CtiInterval> reversed{{NodeId{0}, NodeId{1}, 5, 3}};
  EXPECT_THROW(from_cti(reversed, {}), ModelError);
  std::vector<CtiInterval> infinite{{NodeId{0}, NodeId{1}, 0, INFINITY}};
  EXPECT_THROW(from_cti(infinite, {}), ModelError);
  std::vector<CtiInterval> loop{{NodeId{1}, NodeId{1}, 0, 1}};
  EXPECT_THROW(from_cti(loop, {}), ModelError);
  std::vector<CtiInterval> ok{{NodeId{0}, NodeId{3}, 0, 1}};
  EXPECT_THROW(from_cti(ok, {.node_count = 2}), ModelError);
}

TEST(FromCti, ModeStrings) {
  for (CtiMode m : {CtiMode::MixedEdges, CtiMode::Snapshots, CtiMode::SpatialTemporal}) {
    EXPECT_EQ(parse_cti_mode(to_string(m)), m);
  }
  EXPECT_EQ(parse_cti_endpoints("closed"), CtiEndpoints::Closed);
  EXPECT_FALSE(parse_cti_mode("bogus").has_value());
}

TEST(FromSte, ContactsAndWaits) {
  std::vector<SteContact> contacts{{NodeId{0}, NodeId{1}, "t0"}, {NodeId{1}, NodeId{2}, "t1"}};
  std::vector<SteWait> waits{{NodeId{1}, "t0", "t1"}};
  const Tvg g = from_ste(contacts, waits);
  EXPECT_EQ(g.time_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(has(g, 1, "t0", 1, "t1"));
  EXPECT_TRUE(detect_class(g).contains(ModelClass::STE));

  std::vector<SteContact> loop{{NodeId{1}, NodeId{1}, "t0"}};
  EXPECT_THROW(from_ste(loop, {}), ModelError);
  std::vector<SteWait> still{{NodeId{0}, "t1", "t1"}};
  EXPECT_THROW(from_ste({}, still), ModelError);
  std::vector<SteWait> backwards{{NodeId{0}, "t1", "t0"}};
  EXPECT_THROW(from_ste({}, backwards), ModelError);
}

TEST(FromSte, ExampleGraphRoundTrip) {
  const Tvg w = make_w();
  std::vector<SteContact> contacts;
  std::vector<SteWait> waits;
  for (const auto& e : w.edges()) {
    if (classify(e).kind == EdgeKind::Spatial) {
      contacts.push_back({e.origin_node, e.dest_node, std::string(w.time_label(e.origin_time))});
    } else {
      waits.push_back({e.origin_node, std::string(w.time_label(e.origin_time)),
                       std::string(w.time_label(e.dest_time))});
    }
  }
  EXPECT_EQ(from_ste(contacts, waits), w);
  EXPECT_EQ(detect_class(w), (Classes{ModelClass::STE, ModelClass::Unifying}));
}

TEST(FromTme, TemporalAndMixedOnly) {
  std::vector<LabeledEdge> edges{{0, "t0", 1, "t1"}, {1, "t1", 1, "t2"}};
  const Tvg g = from_tme(edges);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(detect_class(g), (Classes{ModelClass::TME, ModelClass::Unifying}));

  std::vector<LabeledEdge> spatial{{0, "t0", 1, "t0"}};
  EXPECT_THROW(from_tme(spatial), ModelError);
  std::vector<LabeledEdge> backwards{{0, "t1", 1, "t0"}};
  EXPECT_THROW(from_tme(backwards), ModelError);
}

TEST(FromTme, NumericLabelsOrderByValue) {
  std::vector<LabeledEdge> edges{{0, "10", 1, "2.5"}};
  EXPECT_THROW(from_tme(edges), ModelError);
  std::vector<LabeledEdge> forward{{0, "2.5", 1, "10"}};
  const Tvg g = from_tme(forward);
  EXPECT_EQ(g.time_label(TimeId{0}), "2.5");
}

TEST(DetectClass, RegressiveIsUnifyingOnly) {
  Tvg g(2, time_labels(2));
  g.add_edge(g.make_edge(0, "t1", 0, "t0"));
  EXPECT_EQ(detect_class(g), (Classes{ModelClass::Unifying}));
}

TEST(DetectClass, SelfLoopIsUnifyingOnly) {
  Tvg g(2, time_labels(2));
  g.add_edge(g.make_edge(0, "t1", 0, "t1"));
  EXPECT_EQ(detect_class(g), (Classes{ModelClass::Unifying}));
}

TEST(DetectClass, SpatialPlusMixedIsUnifyingOnly) {
  Tvg g(3, time_labels(2));
  g.add_edge(g.make_edge(0, "t0", 1, "t0"));
  g.add_edge(g.make_edge(0, "t0", 2, "t1"));
  EXPECT_EQ(detect_class(g), (Classes{ModelClass::Unifying}));
}

TEST(DetectClass, EmptyGraphBelongsEverywhere) {
  EXPECT_EQ(detect_class(Tvg(2, time_labels(2))).size(), 5u);
}

TEST(CanRepresent, TableCells) {
  using M = ModelClass;
  const bool expected[5][5] = {
      {true, true, false, false, false},
      {true, true, true, false, false},
      {true, true, true, false, false},
      {false, true, false, true, false},
      {true, true, true, true, true},
  };
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      EXPECT_EQ(can_represent(kAllModelClasses[a], kAllModelClasses[b]), expected[a][b])
          << to_string(kAllModelClasses[a]) << " -> " << to_string(kAllModelClasses[b]);
  EXPECT_TRUE(can_represent(M::Snapshot, M::CTI));
  EXPECT_FALSE(can_represent(M::TME, M::STE));
  for (M m : kAllModelClasses) {
    EXPECT_TRUE(can_represent(m, m));
    EXPECT_TRUE(can_represent(M::Unifying, m));
    EXPECT_EQ(parse_model_class(to_string(m)), m);
  }
}

// Random CTI inputs: every mixed edge (u, open, v, close) must be matched by
// a journey from u to v in the spatial-temporal discretization.
TEST(ConvertProperties, ReachabilityPreserved) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<std::uint32_t> node(0, 4);
    std::uniform_int_distribution<int> instant(0, 12);
    std::vector<CtiInterval> intervals;
    const int n = count(rng);
    while (static_cast<int>(intervals.size()) < n) {
      const NodeId u{node(rng)}, v{node(rng)};
      int a = instant(rng), b = instant(rng);
      if (u == v || a == b) continue;
      if (a > b) std::swap(a, b);
      intervals.push_back({u, v, double(a), double(b), (trial % 2) == 0});
    }

    const Tvg mixed = from_cti(intervals, {});
    for (CtiEndpoints endpoints : {CtiEndpoints::Closed, CtiEndpoints::HalfOpen}) {
      const Tvg st = from_cti(intervals, {.mode = CtiMode::SpatialTemporal, .endpoints = endpoints});
      ASSERT_EQ(st.time_count(), mixed.time_count());
      for (const auto& e : mixed.edges()) {
        // Half-open coverage starts one instant after the opening endpoint.
        const TimeId start{e.origin_time.index + (endpoints == CtiEndpoints::HalfOpen ? 1u : 0u)};
        const ReachSet r = reachable(st, {e.origin_node, start});
        EXPECT_NE(std::find(r.reached.begin(), r.reached.end(), e.destination()),
                  r.reached.end());
      }
      const auto classes = detect_class(st);
      EXPECT_TRUE(classes.contains(ModelClass::CTI));
      EXPECT_TRUE(classes.contains(ModelClass::STE));
    }
  }
}

TEST(ConvertProperties, ImporterClassMembership) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint32_t> node(0, 5);
  std::uniform_int_distribution<int> t(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SteContact> contacts;
    std::vector<SteWait> waits;
    std::vector<LabeledEdge> tme;
    SnapshotSequence seq{6, {}};
    for (int k = 0; k <= 6; ++k) seq.snapshots.push_back({"t" + std::to_string(k), {}});
    for (int k = 0; k < 15; ++k) {
      const std::uint32_t u = node(rng), v = node(rng);
      int a = t(rng), b = t(rng);
      if (u != v) {
        contacts.push_back({NodeId{u}, NodeId{v}, "t" + std::to_string(a)});
        auto& pairs = seq.snapshots[a].pairs;
        if (std::find(pairs.begin(), pairs.end(), std::pair{NodeId{u}, NodeId{v}}) == pairs.end())
          pairs.push_back({NodeId{u}, NodeId{v}});
      }
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      waits.push_back({NodeId{u}, "t" + std::to_string(a), "t" + std::to_string(b)});
      tme.push_back({u, "t" + std::to_string(a), v, "t" + std::to_string(b)});
    }
    ImportOptions options{.node_count = 6};
    const Tvg ste = from_ste(contacts, waits, options);
    EXPECT_TRUE(detect_class(ste).contains(ModelClass::STE));
    EXPECT_TRUE(detect_class(from_snapshots(seq)).contains(ModelClass::Snapshot));
    // Repeated quadruples are legal in the raw lists; merge through a set.
    std::vector<LabeledEdge> unique_tme;
    for (const auto& e : tme) {
      if (std::none_of(unique_tme.begin(), unique_tme.end(), [&](const LabeledEdge& f) {
            return f.origin_node == e.origin_node && f.dest_node == e.dest_node &&
                   f.origin_time == e.origin_time && f.dest_time == e.dest_time;
          }))
        unique_tme.push_back(e);
    }
    EXPECT_TRUE(detect_class(from_tme(unique_tme, options)).contains(ModelClass::TME));
  }
}
