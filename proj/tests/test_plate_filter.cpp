// Copyright 2026 The lpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "lpd/plate_filter.hpp"

namespace lpd {
namespace {

constexpr ImageSize k640{640, 480};

Blob make_blob(std::uint32_t label, Rect box, std::uint64_t area) {
  Blob b;
  b.label = label;
  b.bbox = box;
  b.area = area;
  b.sum_x = area * static_cast<std::uint64_t>(box.x);
  b.sum_y = area * static_cast<std::uint64_t>(box.y);
  return b;
}

TEST(FilterConfig, Validation) {
  FilterConfig c;
  EXPECT_NO_THROW(c.validate());
  c.min_w = 400;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.ratio_min = 0;
  c.ratio_max = 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.border_margin = -1;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(FilterHeuristic, EmptyInput) {
  EXPECT_TRUE(filter_heuristic({}, FilterConfig{}, k640).empty());
}

// 120x30: width 60<=120<=300, height 15<=30<=100, ratio 4 in [2,6],
// area 3000 in [400,20000], 100px from every border.
TEST(FilterHeuristic, PlateShapedBlobIsKept) {
  const Blob plate = make_blob(1, {100, 100, 120, 30}, 3000);
  EXPECT_EQ(filter_heuristic({plate}, FilterConfig{}, k640), std::vector<Blob>{plate});
}

TEST(FilterHeuristic, BorderMargin) {
  const Blob at_edge = make_blob(1, {0, 100, 120, 30}, 3000);
  EXPECT_TRUE(filter_heuristic({at_edge}, FilterConfig{}, k640).empty());
  const Blob two_away = make_blob(1, {2, 100, 120, 30}, 3000);
  EXPECT_EQ(filter_heuristic({two_away}, FilterConfig{}, k640).size(), 1u);
  const Blob right_edge = make_blob(1, {519, 100, 120, 30}, 3000);  // 1px from the right
  EXPECT_TRUE(filter_heuristic({right_edge}, FilterConfig{}, k640).empty());
}

TEST(FilterHeuristic, EachRuleRejects) {
  const FilterConfig c;
  EXPECT_TRUE(filter_heuristic({make_blob(1, {10, 10, 59, 20}, 500)}, c, k640).empty());   // width
  EXPECT_TRUE(filter_heuristic({make_blob(1, {10, 10, 301, 60}, 5000)}, c, k640).empty()); // width
  EXPECT_TRUE(filter_heuristic({make_blob(1, {10, 10, 70, 14}, 500)}, c, k640).empty());   // height
  EXPECT_TRUE(filter_heuristic({make_blob(1, {10, 10, 80, 50}, 2000)}, c, k640).empty());  // ratio 1.6
  EXPECT_TRUE(filter_heuristic({make_blob(1, {10, 10, 130, 20}, 399)}, c, k640).empty());  // area
  // Inclusive bounds.
  EXPECT_EQ(filter_heuristic({make_blob(1, {10, 10, 60, 30}, 400)}, c, k640).size(), 1u);
  EXPECT_EQ(filter_heuristic({make_blob(1, {10, 10, 90, 15}, 1000)}, c, k640).size(), 1u);
}

TEST(FilterStages, CountsAreNonIncreasingAndNamed) {
  const std::vector<Blob> blobs = {
      make_blob(1, {0, 10, 120, 30}, 3000),   // location
      make_blob(2, {10, 10, 20, 20}, 300),    // width
      make_blob(3, {10, 50, 100, 10}, 900),   // height
      make_blob(4, {10, 80, 90, 80}, 4000),   // ratio
      make_blob(5, {10, 200, 120, 30}, 399),  // area
      make_blob(6, {10, 300, 120, 30}, 3000),
  };
  const HeuristicResult r = filter_stages(blobs, FilterConfig{}, k640);
  ASSERT_EQ(r.stages.size(), 5u);
  const std::vector<StageCount> expected = {
      {"location", 5}, {"width", 4}, {"height", 3}, {"ratio", 2}, {"area", 1}};
  EXPECT_EQ(r.stages, expected);
  ASSERT_EQ(r.survivors.size(), 1u);
  EXPECT_EQ(r.survivors[0].label, 6u);
}

std::vector<Blob> random_blobs(std::mt19937_64& rng, int n) {
  std::vector<Blob> out;
  for (int i = 0; i < n; ++i) {
    const int w = 1 + static_cast<int>(rng() % 320);
    const int h = 1 + static_cast<int>(rng() % 120);
    const Rect box{static_cast<int>(rng() % (640 - w + 1)), static_cast<int>(rng() % (480 - h + 1)), w, h};
    out.push_back(make_blob(static_cast<std::uint32_t>(i + 1), box, 1 + rng() % box.area()));
  }
  return out;
}

TEST(FilterHeuristic, SubsetOrderPreservingIdempotent) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto blobs = random_blobs(rng, 40);
    const auto once = filter_heuristic(blobs, FilterConfig{}, k640);
    ASSERT_EQ(filter_heuristic(once, FilterConfig{}, k640), once);
    std::size_t j = 0;
    for (const Blob& b : blobs) {
      if (j < once.size() && once[j] == b) ++j;
    }
    ASSERT_EQ(j, once.size());
  }
}

TEST(FilterHeuristic, WideningNeverRemovesSurvivors) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto blobs = random_blobs(rng, 40);
    const FilterConfig narrow;
    FilterConfig wide = narrow;
    wide.min_w -= static_cast<int>(rng() % 20);
    wide.max_w += static_cast<int>(rng() % 20);
    wide.min_h -= static_cast<int>(rng() % 5);
    wide.max_h += static_cast<int>(rng() % 20);
    wide.ratio_min -= 0.5;
    wide.ratio_max += 1.0;
    wide.border_margin = static_cast<int>(rng() % 3);
    wide.area_min -= static_cast<int>(rng() % 100);
    wide.area_max += static_cast<int>(rng() % 1000);
    const auto kept_narrow = filter_heuristic(blobs, narrow, k640);
    const auto kept_wide = filter_heuristic(blobs, wide, k640);
    for (const Blob& b : kept_narrow) {
      ASSERT_NE(std::find(kept_wide.begin(), kept_wide.end(), b), kept_wide.end());
    }
  }
}

TEST(Score, EmptyIsAnError) { EXPECT_THROW(score_candidates({}), NoCandidatesError); }

TEST(Score, SingleBlobScoresItsDensity) {
  const Blob b = make_blob(1, {0, 0, 10, 10}, 73);
  const auto s = score_candidates({b});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].score, b.edge_density());
}

TEST(Score, EqualAreas) {
  const auto s = score_candidates({make_blob(1, {0, 0, 10, 10}, 90), make_blob(2, {0, 0, 18, 10}, 90)});
  EXPECT_EQ(s[0].score, Ratio(9, 10));
  EXPECT_EQ(s[1].score, Ratio(5, 10));
}

// Densities 0.8 and 0.9 with the second blob at half the maximum area:
// 0.8 * 1 and 0.9 * 0.5. (Area 500 at density 0.9 has no integer box, so
// the areas are doubled.)
TEST(Score, AreaNormalised) {
  const Blob big = make_blob(1, {0, 0, 50, 45}, 1800);
  const Blob dense = make_blob(2, {0, 0, 50, 20}, 900);
  ASSERT_EQ(big.edge_density(), Ratio(8, 10));
  ASSERT_EQ(dense.edge_density(), Ratio(9, 10));
  const auto s = score_candidates({big, dense});
  EXPECT_EQ(s[0].score, Ratio(80, 100));
  EXPECT_EQ(s[1].score, Ratio(45, 100));
  EXPECT_DOUBLE_EQ(s[1].score.value(), 0.45);
}

TEST(Score, InUnitIntervalAndMaxAreaKeepsDensity) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto blobs = random_blobs(rng, 1 + static_cast<int>(rng() % 10));
    const auto scored = score_candidates(blobs);
    bool any_equal = false;
    for (const CandidateScore& c : scored) {
      ASSERT_GT(c.score, Ratio(0, 1));
      ASSERT_LE(c.score, Ratio(1, 1));
      any_equal |= c.score == c.blob.edge_density();
    }
    ASSERT_TRUE(any_equal);
  }
}

TEST(Select, EmptyArgmaxAndTieBreak) {
  EXPECT_FALSE(select_plate({}).has_value());
  std::vector<CandidateScore> s = {
      {make_blob(1, {0, 0, 1, 1}, 1), Ratio(3, 10)},
      {make_blob(2, {0, 5, 1, 1}, 1), Ratio(7, 10)},
      {make_blob(3, {0, 9, 1, 1}, 1), Ratio(5, 10)},
  };
  EXPECT_EQ(select_plate(s)->label, 2u);
  std::vector<CandidateScore> tie = {
      {make_blob(1, {5, 40, 1, 1}, 1), Ratio(1, 2)},
      {make_blob(2, {9, 10, 1, 1}, 1), Ratio(2, 4)},
  };
  EXPECT_EQ(select_plate(tie)->label, 2u);
  tie[1].blob.bbox.y = 40;
  EXPECT_EQ(select_plate(tie)->label, 1u);  // same y, smaller x
}

TEST(Extract, MarginAndClamp) {
  RgbImage img(20, 10);
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 20; ++x) img(x, y) = {static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y), 0};
  }
  const Blob interior = make_blob(1, {5, 3, 6, 4}, 10);
  EXPECT_EQ(extract_plate(img, interior, 0), crop(img, interior.bbox));
  const RgbImage grown = extract_plate(img, interior, 2);
  EXPECT_EQ(grown.width(), 10);
  EXPECT_EQ(grown.height(), 8);
  EXPECT_EQ(grown(0, 0), (Rgb{3, 1, 0}));
  const Blob corner = make_blob(1, {0, 0, 4, 3}, 5);
  const RgbImage clamped = extract_plate(img, corner, 5);
  EXPECT_EQ(clamped.width(), 9);
  EXPECT_EQ(clamped.height(), 8);
  EXPECT_THROW(extract_plate(img, make_blob(1, {2, 2, 0, 3}, 1), 0), BoundsError);
}

}  // namespace
}  // namespace lpd
