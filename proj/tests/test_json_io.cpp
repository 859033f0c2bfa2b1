#include <gtest/gtest.h>

#include "corpus.hpp"
#include "throws.hpp"
#include "twlayout/drawing.hpp"
#include "twlayout/json_io.hpp"
#include "twlayout/ktree_track.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/tree_partition.hpp"

using namespace twlayout;
using io::json;
using twtest::kind_of;
using twtest::make;

TEST(Json, GraphFormatIsSortedPairs) {
  const Graph g = twtest::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(io::to_json(g).dump(), R"({"edges":[[0,1],[0,2],[1,3]],"n":4})");
  EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
}

TEST(Json, RoundTrips) {
  const Graph g = make(Family::RandomKTree, 40, 2, 3);
  const TrackLayout l = ktree_track_layout(g, 2).layout;
  EXPECT_EQ(io::track_layout_from_json(io::to_json(l)), l);

  const QueueLayout q = queue_from_track(g, l);
  const QueueLayout q2 = io::queue_layout_from_json(io::to_json(q));
  EXPECT_EQ(q2.order, q.order);
  EXPECT_EQ(q2.queues, q.queues);

  const TreePartition tp = build_tree_partition(g, 2);
  const TreePartition tp2 = io::tree_partition_from_json(io::to_json(tp));
  EXPECT_EQ(tp2.parent, tp.parent);
  EXPECT_EQ(tp2.bags, tp.bags);
  EXPECT_EQ(tp2.depth, tp.depth);

  const Drawing3D d = draw_from_track(g, l);
  const Drawing3D d2 = io::drawing_from_json(io::to_json(d));
  EXPECT_EQ(d2.points, d.points);
  EXPECT_EQ(d2.box, d.box);
}

TEST(Json, DrawingPointsAreTranslated) {
  const Graph k3 = make(Family::Complete, 3);
  const json j = io::to_json(moment_curve(k3));
  EXPECT_EQ(j.at("points"), (json{{0, 0, 0}, {1, 3, 7}, {2, 8, 26}}));
  EXPECT_EQ(j.at("origin"), (json{1, 1, 1}));
}

TEST(Json, MalformedInputIsBadParams) {
  EXPECT_EQ(kind_of([] { io::graph_from_json(json{{"n", 2}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { io::graph_from_json(json{{"n", 2}, {"edges", {{0, 5}}}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { io::graph_from_json(json{{"n", "x"}, {"edges", json::array()}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { io::track_layout_from_json(json{{"mode", "weird"}, {"tracks", json::array()}}); }),
            ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { io::drawing_from_json(json{{"points", {{1, 2}}}}); }), ErrorKind::BadParams);
}

TEST(Json, ReportsAndHash) {
  const Graph g = make(Family::Path, 3);
  TrackLayout l;
  l.tracks = {{0, 2}, {1}};
  const json r = io::to_json(verify_track_layout(g, l));
  EXPECT_TRUE(r.at("ok").get<bool>());
  EXPECT_EQ(io::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(io::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}
