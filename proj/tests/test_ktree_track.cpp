#include <gtest/gtest.h>

#include <limits>

#include "brute.hpp"
#include "corpus.hpp"
#include "throws.hpp"
#include "twlayout/generators.hpp"
#include "twlayout/ktree_track.hpp"
#include "twlayout/track_constructions.hpp"

using namespace twlayout;
using twtest::kind_of;
using twtest::make;

namespace {

void expect_valid(const Graph& g, const TrackLayout& l) {
  const auto r = verify_track_layout(g, l);
  EXPECT_TRUE(r.ok) << r.message;
  EXPECT_EQ(r.x_crossings, 0u);
}

}  // namespace

TEST(KTreeBounds, ClosedForms) {
  EXPECT_EQ(ktree_track_bound(0), 1u);
  EXPECT_EQ(ktree_track_bound(1), 3u);
  EXPECT_EQ(ktree_track_bound(2), 54u);
  EXPECT_EQ(ktree_track_bound(3), 1259712u);
  EXPECT_EQ(ktree_track_bound(4), std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(ktree_cover_set_bound(0), 1u);
  EXPECT_EQ(ktree_cover_set_bound(1), 6u);
  EXPECT_EQ(ktree_cover_set_bound(2), 7776u);
  for (int k = 0; k <= 6; ++k) EXPECT_TRUE(ktree_recurrence_holds(k)) << k;
}

TEST(KTreeTrack, EdgelessIsOneTrack) {
  const Graph g(5);
  const auto res = ktree_track_layout(g, 0);
  EXPECT_EQ(res.layout.nonempty_track_count(), 1u);
  expect_valid(g, res.layout);
  EXPECT_EQ(kind_of([] { ktree_track_layout(make(Family::Path, 2), 0); }), ErrorKind::NotKTree);
}

TEST(KTreeTrack, TreesUseAtMostThreeTracks) {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const Graph t = make(Family::RandomTree, 50 + 17 * static_cast<int>(s), 0, s);
    const auto res = ktree_track_layout(t, 1);
    EXPECT_LE(res.layout.nonempty_track_count(), 3u);
    EXPECT_LE(res.layout.nonempty_track_count(), std::max<std::size_t>(tree_3track(t).nonempty_track_count(), 3));
    expect_valid(t, res.layout);
  }
}

TEST(KTreeTrack, TwoTreesWithinFiftyFour) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const Graph g = make(Family::RandomKTree, 1000, 2, s);
    const auto res = ktree_track_layout(g, 2);
    EXPECT_LE(res.layout.nonempty_track_count(), 54u);
    expect_valid(g, res.layout);
    ASSERT_EQ(res.cover_sets.size(), 3u);
    for (std::size_t level = 0; level < res.cover_sets.size(); ++level) {
      EXPECT_LE(res.cover_sets[level], ktree_cover_set_bound(static_cast<int>(level)));
      EXPECT_LE(res.level_tracks[level], ktree_track_bound(static_cast<int>(level)));
    }
  }
}

TEST(KTreeTrack, SmallInstancesAgreeWithPairwiseCheck) {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t s = 1; s <= 6; ++s) {
      const Graph g = make(Family::RandomKTree, 40 + 10 * static_cast<int>(s), k, s);
      const auto res = ktree_track_layout(g, k);
      EXPECT_LE(res.layout.nonempty_track_count(), ktree_track_bound(k));
      expect_valid(g, res.layout);
      EXPECT_EQ(twtest::brute_x_crossings(g, res.layout), 0);
    }
  }
}

TEST(KTreeTrack, LargerKThanNeeded) {
  const Graph t = make(Family::RandomTree, 80, 0, 3);
  const auto res = ktree_track_layout(t, 2);
  EXPECT_LE(res.layout.nonempty_track_count(), 54u);
  expect_valid(t, res.layout);
}

TEST(KTreeTrack, Rejections) {
  EXPECT_EQ(kind_of([] { ktree_track_layout(make(Family::Cycle, 5), 2); }), ErrorKind::NotKTree);
  EXPECT_EQ(kind_of([] { ktree_track_layout(make(Family::Complete, 4), 2); }), ErrorKind::NotKTree);
  KTreeTrackOptions tiny;
  tiny.vertex_budget = 10;
  EXPECT_EQ(kind_of([&] { ktree_track_layout(make(Family::RandomKTree, 50, 2, 1), 2, tiny); }), ErrorKind::ResourceLimit);
}

TEST(KTreeTrack, PartialKTreesAndDecompositions) {
  for (const auto& inst : twtest::corpus()) {
    const auto res = partial_ktree_track_layout(inst.graph);
    EXPECT_LE(res.layout.nonempty_track_count(), ktree_track_bound(res.k)) << inst.name;
    expect_valid(inst.graph, res.layout);
  }
  const GeneratedGraph gk = generate_gk(2);
  const auto res = ktree_track_layout(gk.graph, gk.decomposition);
  EXPECT_TRUE(res.fill_edges.empty());
  EXPECT_LE(res.layout.nonempty_track_count(), 54u);
  EXPECT_GE(res.layout.nonempty_track_count(), static_cast<std::size_t>(gk_track_count(2)));
  expect_valid(gk.graph, res.layout);
}
