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

// Definitions of the committed fixtures, shared by the generator and tests.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "lpd/lpd.hpp"

#ifndef LPD_FIXTURE_DIR
#define LPD_FIXTURE_DIR "tests/fixtures"
#endif

namespace lpd::fixtures {

inline std::filesystem::path dir() { return LPD_FIXTURE_DIR; }

inline GrayImage tiny_gray() {
  return GrayImage(4, 3, {0, 1, 2, 3, 64, 128, 192, 255, 7, 0x0a, 0x0d, 0x20});
}

inline RgbImage tiny_rgb() {
  return RgbImage(3, 2, {{1, 2, 3}, {255, 0, 0}, {0, 255, 0}, {0, 0, 255}, {10, 13, 32}, {80, 53, 54}});
}

inline SceneSpec golden_scene_spec() { return random_scene_spec(11, 2, {320, 240}); }

// Plate strokes 9 px wide and 3 px apart: two 3x3 dilation passes leave the
// plate in pieces, larger masks join it.
inline SceneSpec wide_stroke_scene_spec() {
  SceneSpec spec;
  spec.seed = 7;
  spec.image_size = {320, 240};
  spec.plate_rect = {60, 90, 200, 56};
  spec.char_count = 5;
  spec.distractors = 2;
  spec.background_level = 120;
  spec.stroke_width = 9;
  spec.stroke_gap = 3;
  spec.glyph_gap = 3;
  return spec;
}

// Two candidates with near-identical boxes: a hollow elliptical "logo" rim
// (upper left) and a solid plate block with a few character holes.
inline constexpr Rect kLogoBox{20, 20, 121, 33};
inline constexpr Rect kPlateBox{160, 70, 120, 30};

inline BinaryImage logo_vs_plate_mask() {
  BinaryImage mask(320, 120);
  const int cx = kLogoBox.x + kLogoBox.w / 2;
  const int cy = kLogoBox.y + kLogoBox.h / 2;
  const auto inside = [](int dx, int dy, int a, int b) {
    return static_cast<std::int64_t>(dx) * dx * b * b + static_cast<std::int64_t>(dy) * dy * a * a <=
           static_cast<std::int64_t>(a) * a * b * b;
  };
  for (int dy = -16; dy <= 16; ++dy) {
    for (int dx = -60; dx <= 60; ++dx) {
      if (inside(dx, dy, 60, 16) && !inside(dx, dy, 53, 10)) mask.set(cx + dx, cy + dy, true);
    }
  }
  for (int y = kPlateBox.y; y < kPlateBox.bottom(); ++y) {
    for (int x = kPlateBox.x; x < kPlateBox.right(); ++x) {
      const bool hole = y > kPlateBox.y + 6 && y < kPlateBox.bottom() - 6 && (x - kPlateBox.x) % 20 == 10;
      mask.set(x, y, !hole);
    }
  }
  return mask;
}

inline Rect read_truth(const std::filesystem::path& path) {
  std::ifstream in(path);
  Rect r;
  in >> r.x >> r.y >> r.w >> r.h;
  return r;
}

}  // namespace lpd::fixtures
