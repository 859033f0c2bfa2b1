#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute.hpp"
#include "corpus.hpp"
#include "throws.hpp"
#include "twlayout/colouring.hpp"
#include "twlayout/ktree_track.hpp"
#include "twlayout/ordering.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/track_constructions.hpp"

using namespace twlayout;
using twtest::from_edges;
using twtest::kind_of;
using twtest::make;

namespace {

std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

void expect_queue_valid(const Graph& g, const QueueLayout& q) {
  const auto r = verify_queue_layout(g, q);
  EXPECT_TRUE(r.ok) << r.message;
  for (const auto& page : q.queues) EXPECT_EQ(twtest::brute_nested_pairs(q.order, page), 0u);
}

}  // namespace

TEST(Rainbow, Examples) {
  const Graph nested = from_edges(4, {{0, 3}, {1, 2}});
  EXPECT_EQ(max_rainbow(nested, identity(4)).size, 2u);
  EXPECT_EQ(max_rainbow(nested, identity(4)).edges, (std::vector<Edge>{Edge(0, 3), Edge(1, 2)}));
  const Graph disjoint = from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(max_rainbow(disjoint, identity(4)).size, 1u);

  // K_4: every one of the 24 orders has a 2-rainbow
  const Graph k4 = make(Family::Complete, 4);
  auto order = identity(4);
  do {
    EXPECT_EQ(max_rainbow(k4, order).size, 2u);
  } while (std::next_permutation(order.begin(), order.end()));

  // a rainbow of five edges needs five queues
  const Graph five = from_edges(10, {{0, 9}, {1, 8}, {2, 7}, {3, 6}, {4, 5}});
  EXPECT_EQ(max_rainbow(five, identity(10)).size, 5u);
  const QueueLayout q = queues_from_ordering(five, identity(10));
  EXPECT_EQ(q.queue_count(), 5u);
  expect_queue_valid(five, q);

  EXPECT_EQ(kind_of([&] { max_rainbow(five, identity(3)); }), ErrorKind::BadParams);
}

TEST(Rainbow, EqualsQueueCountOnRandomOrders) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 25);
    GeneratorParams p;
    p.n = n;
    p.p = 0.05 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    p.seed = static_cast<std::uint64_t>(trial) + 100;
    const Graph g = generate(Family::Gnp, p).graph;
    auto order = identity(static_cast<std::size_t>(n));
    std::shuffle(order.begin(), order.end(), rng);
    const Rainbow r = max_rainbow(g, order);
    EXPECT_EQ(r.size, twtest::brute_rainbow(g, order));
    const QueueLayout q = queues_from_ordering(g, order);
    EXPECT_EQ(q.queue_count(), r.size);
    expect_queue_valid(g, q);
  }
}

TEST(QueueVerify, DetectsNestingAndMissingEdges) {
  const Graph g = from_edges(4, {{0, 3}, {1, 2}});
  QueueLayout q{identity(4), {{Edge(0, 3), Edge(1, 2)}}};
  const auto r = verify_queue_layout(g, q);
  EXPECT_FALSE(r.pages_ok);
  ASSERT_TRUE(r.witness.has_value());
  q.queues = {{Edge(0, 3)}};
  EXPECT_FALSE(verify_queue_layout(g, q).edges_ok);
  q.queues = {{Edge(0, 3)}, {Edge(1, 2)}};
  EXPECT_TRUE(verify_queue_layout(g, q).ok);
  q.order = {0, 1, 2};
  EXPECT_FALSE(verify_queue_layout(g, q).order_ok);
}

TEST(StackVerify, DetectsCrossing) {
  const Graph g = from_edges(4, {{0, 2}, {1, 3}});
  StackLayout s{identity(4), {{Edge(0, 2), Edge(1, 3)}}};
  EXPECT_FALSE(verify_stack_layout(g, s).pages_ok);
  s.stacks = {{Edge(0, 2)}, {Edge(1, 3)}};
  EXPECT_TRUE(verify_stack_layout(g, s).ok);
}

TEST(Trees, OneQueueAndOneStack) {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const Graph t = make(Family::RandomTree, 20 + 31 * static_cast<int>(s), 0, s);
    const QueueLayout q = tree_1queue(t);
    EXPECT_EQ(q.queue_count(), 1u);
    expect_queue_valid(t, q);
    const StackLayout st = tree_1stack(t);
    EXPECT_EQ(st.stack_count(), 1u);
    EXPECT_TRUE(verify_stack_layout(t, st).ok);
    EXPECT_EQ(twtest::brute_crossing_pairs(st.order, st.stacks[0]), 0u);
    // lex-BFS order of a tree has no nested pair
    EXPECT_EQ(max_rainbow(t, lex_bfs(t, 0).sequence).size, 1u);
  }
  EXPECT_EQ(kind_of([] { tree_1queue(make(Family::Cycle, 4)); }), ErrorKind::NotForest);
}

TEST(QueueFromTrack, Examples) {
  // bipartite 2-track layout: one queue, A then B
  const Graph p4 = make(Family::Path, 4);
  TrackLayout two;
  two.tracks = {{0, 2}, {1, 3}};
  const QueueLayout q = queue_from_track(p4, two);
  EXPECT_EQ(q.queue_count(), 1u);
  EXPECT_EQ(q.order, (std::vector<Vertex>{0, 2, 1, 3}));
  expect_queue_valid(p4, q);

  for (std::uint64_t s = 1; s <= 20; ++s) {
    const Graph t = make(Family::RandomTree, 100, 0, s);
    const QueueLayout tq = queue_from_track(t, tree_3track(t));
    EXPECT_LE(tq.queue_count(), 2u);
    expect_queue_valid(t, tq);
  }
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const Graph g = make(Family::RandomKTree, 300, 2, s);
    const auto res = ktree_track_layout(g, 2);
    const QueueLayout kq = queue_from_track(g, res.layout);
    EXPECT_LE(kq.queue_count(), 53u);
    EXPECT_LE(kq.queue_count() + 1, res.layout.nonempty_track_count());
    expect_queue_valid(g, kq);
  }
}

TEST(QueueFromTrack, ImproperLayouts) {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const auto inst = twtest::random_layout_graph(25, 4, 3, 80, s, true);
    const QueueLayout q = queue_from_track(inst.graph, inst.layout);
    expect_queue_valid(inst.graph, q);
  }
}

TEST(TrackFromQueue, Examples) {
  // tree, 2-colouring, 1 queue: at most 2 * 2 = 4 tracks
  const Graph t = make(Family::RandomTree, 60, 0, 2);
  const Colouring c = acyclic_colouring_ktree(t, ktree_peo(t).order, 1);
  const QueueLayout q = tree_1queue(t);
  const auto res = track_from_queue(t, q, c);
  EXPECT_LE(res.layout.nonempty_track_count(), 4u);
  EXPECT_EQ(res.bound, 4u);
  EXPECT_TRUE(verify_track_layout(t, res.layout).ok);
  EXPECT_TRUE(track_pairs_monochromatic(t, q, c, res.layout));

  // edgeless graph: one track per colour
  const Graph e(4);
  const auto er = track_from_queue(e, QueueLayout{identity(4), {}}, Colouring{{0, 1, 2, 0}, 3});
  EXPECT_EQ(er.layout.nonempty_track_count(), 3u);
  EXPECT_TRUE(verify_track_layout(e, er.layout).ok);

  // 2-colouring of C_4 is not acyclic
  const Graph c4 = make(Family::Cycle, 4);
  EXPECT_EQ(kind_of([&] { track_from_queue(c4, queues_from_ordering(c4, identity(4)), Colouring{{0, 1, 0, 1}, 2}); }),
            ErrorKind::NotAcyclic);
}

TEST(TrackFromQueue, TwoTreeRoundTrip) {
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const Graph g = make(Family::RandomKTree, 150, 2, s);
    const Colouring c = acyclic_colouring_ktree(g, ktree_peo(g).order, 2);
    const QueueLayout q = queue_from_track(g, ktree_track_layout(g, 2).layout);
    const auto res = track_from_queue(g, q, c);
    const std::size_t qn = q.queue_count();
    EXPECT_LE(res.layout.nonempty_track_count(), 3 * (2 * qn) * (2 * qn));
    const auto rep = verify_track_layout(g, res.layout);
    EXPECT_TRUE(rep.ok) << rep.message;
    EXPECT_EQ(twtest::brute_x_crossings(g, res.layout), 0);
    EXPECT_TRUE(track_pairs_monochromatic(g, q, c, res.layout));
  }
}

TEST(Bipartite, RoundTrip) {
  // caterpillar with parity sides
  const Graph cat = make(Family::Caterpillar, 20, 0, 3);
  const auto depth = bfs_distances(cat, 0);
  std::vector<int> side(20);
  for (std::size_t v = 0; v < 20; ++v) side[v] = depth[v] % 2;
  const auto res = bipartite_roundtrip(cat, side);
  EXPECT_EQ(res.tracks.track_count(), 2u);
  EXPECT_TRUE(verify_track_layout(cat, res.tracks).ok);
  EXPECT_EQ(res.queue.queue_count(), 1u);
  expect_queue_valid(cat, res.queue);
  for (Vertex v : res.tracks.tracks[0]) EXPECT_EQ(side[static_cast<std::size_t>(v)], 0);

  // K_{2,2} = C_4 admits no 2-track layout with tracks A and B
  GeneratorParams p;
  p.a = 2;
  p.b = 2;
  const Graph k22 = generate(Family::CompleteBipartite, p).graph;
  const std::vector<int> k22_side{0, 0, 1, 1};
  EXPECT_FALSE(twtest::brute_bipartite_two_track(k22, k22_side));
  EXPECT_EQ(kind_of([&] { bipartite_roundtrip(k22, k22_side); }), ErrorKind::NoSuchLayout);

  // spider with long legs is a tree but not a caterpillar
  const Graph spider = from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const std::vector<int> spider_side{0, 1, 0, 1, 0, 1, 0};
  EXPECT_FALSE(twtest::brute_bipartite_two_track(spider, spider_side));
  EXPECT_EQ(kind_of([&] { bipartite_roundtrip(spider, spider_side); }), ErrorKind::NoSuchLayout);

  EXPECT_EQ(kind_of([&] { bipartite_roundtrip(make(Family::Path, 2), std::vector<int>{0, 0}); }), ErrorKind::BadParams);
}

TEST(Bipartite, AgreesWithExhaustiveSearch) {
  for (std::uint64_t s = 1; s <= 60; ++s) {
    GeneratorParams p;
    p.n = 7;
    p.p = 0.3;
    p.seed = s;
    const Graph g0 = generate(Family::Gnp, p).graph;
    std::vector<int> side(7);
    for (std::size_t v = 0; v < 7; ++v) side[v] = static_cast<int>((s >> v) & 1U);
    Graph g(7);
    for (const Edge& e : g0.edges()) {
      if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) g.add_edge(e.u, e.v);
    }
    const bool exists = twtest::brute_bipartite_two_track(g, side);
    bool built = true;
    try {
      const auto res = bipartite_roundtrip(g, side);
      EXPECT_TRUE(verify_track_layout(g, res.tracks).ok);
      expect_queue_valid(g, res.queue);
    } catch (const LayoutError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NoSuchLayout);
      built = false;
    }
    EXPECT_EQ(built, exists) << "seed " << s;
  }
}
