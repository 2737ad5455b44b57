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

#include "lpd/edge_morph.hpp"
#include "oracles.hpp"

namespace lpd {
namespace {

const EdgeConfig kVertical50{EdgeMode::kVerticalDiff, 50};

GrayImage vertical_step(int w, int h, int split) {
  GrayImage img(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = split; x < w; ++x) img(x, y) = 255;
  }
  return img;
}

TEST(EdgeConfig, ThresholdRanges) {
  EXPECT_NO_THROW((EdgeConfig{EdgeMode::kVerticalDiff, 255}.validate()));
  EXPECT_THROW((EdgeConfig{EdgeMode::kVerticalDiff, 256}.validate()), ConfigError);
  EXPECT_NO_THROW((EdgeConfig{EdgeMode::kSobel, 2040}.validate()));
  EXPECT_THROW((EdgeConfig{EdgeMode::kSobel, 2041}.validate()), ConfigError);
  EXPECT_THROW((EdgeConfig{EdgeMode::kSobel, -1}.validate()), ConfigError);
}

TEST(EdgeDetect, RejectsTinyImagesAndWrongMode) {
  EXPECT_THROW(vertical_edge_detect(GrayImage(2, 5), kVertical50), SizeError);
  EXPECT_THROW(sobel_edge_detect(GrayImage(5, 2), EdgeConfig{EdgeMode::kSobel, 10}), SizeError);
  EXPECT_THROW(sobel_edge_detect(GrayImage(5, 5), kVertical50), ConfigError);
}

TEST(VerticalDiff, ConstantAndHorizontalStepGiveNothing) {
  EXPECT_EQ(vertical_edge_detect(GrayImage(6, 6, 90), EdgeConfig{EdgeMode::kVerticalDiff, 0})
                .count_foreground(),
            0u);
  GrayImage step(8, 8, 0);
  for (int y = 4; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) step(x, y) = 255;
  }
  EXPECT_EQ(vertical_edge_detect(step, kVertical50).count_foreground(), 0u);
}

// Frozen from oracle::vertical_diff: only the two columns whose window
// straddles the 3|4 boundary fire, on interior rows.
TEST(VerticalDiff, VerticalStep) {
  const GrayImage step = vertical_step(8, 8, 4);
  const BinaryImage out = vertical_edge_detect(step, kVertical50);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      const bool expected = y >= 1 && y <= 6 && (x == 3 || x == 4);
      EXPECT_EQ(out.foreground(x, y), expected) << x << "," << y;
    }
  }
  EXPECT_EQ(out.gray(), oracle::vertical_diff(step, 50));
}

TEST(VerticalDiff, StrictComparison) {
  // Column sums differ by exactly 3T: not an edge.
  GrayImage img(3, 3, 0);
  for (int y = 0; y < 3; ++y) img(2, y) = 40;
  EXPECT_FALSE(vertical_edge_detect(img, EdgeConfig{EdgeMode::kVerticalDiff, 40}).foreground(1, 1));
  EXPECT_TRUE(vertical_edge_detect(img, EdgeConfig{EdgeMode::kVerticalDiff, 39}).foreground(1, 1));
}

TEST(Sobel, WindowFormulas) {
  ConvWindow win;
  win.z = {0, 255, 255, 0, 255, 255, 0, 255, 255};
  EXPECT_EQ(win.gx(), 0);
  EXPECT_EQ(win.gy(), 1020);
  EXPECT_EQ(win.magnitude(), 1020);
}

TEST(Sobel, VerticalStepFiresBelow1020) {
  const GrayImage step = vertical_step(5, 5, 2);  // window at x=2 has columns (0,255,255)
  EXPECT_TRUE(sobel_edge_detect(step, EdgeConfig{EdgeMode::kSobel, 1019}).foreground(2, 2));
  EXPECT_FALSE(sobel_edge_detect(step, EdgeConfig{EdgeMode::kSobel, 1020}).foreground(2, 2));
  EXPECT_EQ(sobel_edge_detect(step, EdgeConfig{EdgeMode::kSobel, 500}).gray(), oracle::sobel(step, 500));
}

TEST(Sobel, ConstantAndMaximumThreshold) {
  EXPECT_EQ(sobel_edge_detect(GrayImage(5, 5, 17), EdgeConfig{EdgeMode::kSobel, 0}).count_foreground(), 0u);
  std::mt19937_64 rng(2);
  GrayImage checker(16, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) checker(x, y) = (x + y) % 2 ? 255 : 0;
  }
  EXPECT_EQ(sobel_edge_detect(checker, EdgeConfig{EdgeMode::kSobel, kMaxSobelThreshold}).count_foreground(), 0u);
  const GrayImage noise = oracle::random_gray(rng, 16, 16);
  EXPECT_EQ(sobel_edge_detect(noise, EdgeConfig{EdgeMode::kSobel, kMaxSobelThreshold}).count_foreground(), 0u);
}

TEST(EdgeDetect, BorderFrameIsZero) {
  std::mt19937_64 rng(9);
  for (const EdgeConfig cfg : {EdgeConfig{EdgeMode::kVerticalDiff, 0}, EdgeConfig{EdgeMode::kSobel, 0}}) {
    const BinaryImage out = edge_detect(oracle::random_gray(rng, 10, 7), cfg);
    for (int x = 0; x < 10; ++x) {
      EXPECT_FALSE(out.foreground(x, 0));
      EXPECT_FALSE(out.foreground(x, 6));
    }
    for (int y = 0; y < 7; ++y) {
      EXPECT_FALSE(out.foreground(0, y));
      EXPECT_FALSE(out.foreground(9, y));
    }
  }
}

// Shifting the input shifts the interior edge map identically.
TEST(EdgeDetect, TranslationEquivariantOnInterior) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage big = oracle::random_gray(rng, 20, 20);
    const GrayImage a = crop(big, Rect{0, 0, 16, 16});
    const GrayImage b = crop(big, Rect{2, 3, 16, 16});
    for (const EdgeConfig cfg : {EdgeConfig{EdgeMode::kVerticalDiff, 30}, EdgeConfig{EdgeMode::kSobel, 300}}) {
      const BinaryImage ea = edge_detect(a, cfg);
      const BinaryImage eb = edge_detect(b, cfg);
      for (int y = 4; y < 15; ++y) {
        for (int x = 3; x < 15; ++x) ASSERT_EQ(ea.foreground(x, y), eb.foreground(x - 2, y - 3));
      }
    }
  }
}

TEST(EdgeDetect, ThresholdIsAntitone) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage img = oracle::random_gray(rng, 16, 16);
    for (const EdgeMode mode : {EdgeMode::kVerticalDiff, EdgeMode::kSobel}) {
      const int step = mode == EdgeMode::kSobel ? 100 : 15;
      BinaryImage prev = edge_detect(img, EdgeConfig{mode, 0});
      for (int t = step; t <= 10 * step; t += step) {
        const BinaryImage next = edge_detect(img, EdgeConfig{mode, t});
        for (int y = 0; y < 16; ++y) {
          for (int x = 0; x < 16; ++x) ASSERT_TRUE(!next.foreground(x, y) || prev.foreground(x, y));
        }
        prev = next;
      }
    }
  }
}

TEST(MorphConfig, Validation) {
  EXPECT_THROW((MorphConfig{4, 1}.validate()), ConfigError);
  EXPECT_THROW((MorphConfig{1, 1}.validate()), ConfigError);
  EXPECT_THROW((MorphConfig{3, 0}.validate()), ConfigError);
}

TEST(Dilate, EmptyStaysEmpty) {
  EXPECT_EQ(dilate(BinaryImage(6, 6), MorphConfig{5, 3}).count_foreground(), 0u);
}

TEST(Dilate, SinglePixelGrowsToBlock) {
  BinaryImage img(5, 5);
  img.set(2, 2, true);
  const BinaryImage out = dilate(img, MorphConfig{3, 1});
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) EXPECT_EQ(out.foreground(x, y), std::abs(x - 2) <= 1 && std::abs(y - 2) <= 1);
  }
}

TEST(Dilate, TwoPassesOfThreeEqualOneOfFive) {
  BinaryImage img(7, 7);
  img.set(3, 3, true);
  const BinaryImage twice = dilate(img, MorphConfig{3, 2});
  EXPECT_EQ(twice.count_foreground(), 25u);
  EXPECT_FALSE(twice.foreground(0, 3));
  EXPECT_EQ(twice, dilate(img, MorphConfig{5, 1}));
  EXPECT_EQ(twice.gray(), oracle::dilate(img.gray(), 3, 2));
}

TEST(Dilate, ClipsAtBorder) {
  BinaryImage img(4, 4);
  img.set(0, 0, true);
  const BinaryImage out = dilate(img, MorphConfig{3, 1});
  EXPECT_EQ(out.count_foreground(), 4u);
}

TEST(Dilate, MatchesOracleOnRandomImages) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryImage img = oracle::random_binary(rng, 1 + rng() % 20, 1 + rng() % 20, 0.05);
    const int mask = 3 + 2 * static_cast<int>(rng() % 3);
    const int iters = 1 + static_cast<int>(rng() % 3);
    ASSERT_EQ(dilate(img, MorphConfig{mask, iters}).gray(), oracle::dilate(img.gray(), mask, iters));
  }
}

}  // namespace
}  // namespace lpd
