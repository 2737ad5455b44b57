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

// Deterministic synthetic street scenes with a known plate rectangle.
//
// A scene is a uniform background, a light plate carrying dark glyphs built
// from vertical strokes, and optional distractors: filled ellipses ("logos",
// edges on the rim only) alternating with squarish random-noise patches.
// Only std::mt19937_64 output is consumed (never std:: distributions, whose
// results are implementation-defined), so a seed yields the same bytes on
// every platform.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpd/error.hpp"
#include "lpd/raster.hpp"

namespace lpd {

struct SceneSpec {
  std::uint64_t seed = 0;
  ImageSize image_size{640, 480};
  Rect plate_rect;
  int char_count = 6;
  int distractors = 0;
  int background_level = 120;
  // Glyph geometry; 0 means "derive from the seed".
  int stroke_width = 0;
  int stroke_gap = 3;
  int glyph_gap = 0;

  void validate() const {
    if (image_size.width < 1 || image_size.height < 1) throw ConfigError("empty image size", "image_size");
    const Rect& p = plate_rect;
    if (p.w < 1 || p.h < 1 || p.x < 0 || p.y < 0 || p.right() > image_size.width ||
        p.bottom() > image_size.height) {
      throw BoundsError("plate rectangle " + to_string(p) + " outside image", p.x, p.y);
    }
    const double aspect = static_cast<double>(p.w) / p.h;
    if (aspect < 2.0 || aspect > 6.0) throw ConfigError("plate aspect ratio must be in [2, 6]", "plate_rect");
    if (char_count < 4) throw ConfigError("need at least 4 characters", "char_count");
    if (distractors < 0) throw ConfigError("must be >= 0", "distractors");
    if (background_level < 0 || background_level > 255) throw ConfigError("must be in 0..255", "background_level");
    if (stroke_width < 0 || stroke_gap < 1 || glyph_gap < 0) throw ConfigError("invalid glyph geometry", "stroke_width");
  }
};

struct Scene {
  RgbImage image;
  Rect truth;
};

namespace detail {

// Inclusive range; modulo bias is irrelevant at these range sizes.
inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::uint8_t clamp_level(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

inline Rect grow(const Rect& r, int by) { return {r.x - by, r.y - by, r.w + 2 * by, r.h + 2 * by}; }

inline void fill_rect(RgbImage& img, const Rect& r, Rgb c) {
  for (int y = std::max(0, r.y); y < std::min(img.height(), r.bottom()); ++y) {
    for (int x = std::max(0, r.x); x < std::min(img.width(), r.right()); ++x) img(x, y) = c;
  }
}

inline Rgb gray(int v) {
  const auto g = clamp_level(v);
  return {g, g, g};
}

inline void draw_glyphs(RgbImage& img, const SceneSpec& spec, std::mt19937_64& rng, Rgb ink) {
  const Rect& p = spec.plate_rect;
  const int mx = std::max(3, p.w * 6 / 100);
  const int my = std::max(3, p.h * 16 / 100);
  const Rect area{p.x + mx, p.y + my, p.w - 2 * mx, p.h - 2 * my};
  const int gap = spec.stroke_gap;
  const int glyph_gap = spec.glyph_gap > 0 ? spec.glyph_gap : uniform(rng, 4, 6);
  const int pitch = (area.w + glyph_gap) / spec.char_count;
  const int glyph_w = pitch - glyph_gap;
  const int min_stroke = spec.stroke_width > 0 ? spec.stroke_width : 1;
  if (glyph_w < min_stroke || area.h < 4) {
    throw ConfigError("plate too small for " + std::to_string(spec.char_count) + " glyphs", "char_count");
  }

  // Stroke widths across one glyph. A fixed width leaves any slack as side
  // padding; otherwise strokes no wider than a random cap fill the glyph.
  std::vector<int> widths;
  if (spec.stroke_width > 0) {
    widths.assign(std::max(1, (glyph_w + gap) / (spec.stroke_width + gap)), spec.stroke_width);
  } else {
    const int cap = uniform(rng, 3, 5);
    const int n = std::max(1, (glyph_w + gap + cap + gap - 1) / (cap + gap));
    const int ink_w = glyph_w - (n - 1) * gap;
    if (ink_w < n) throw ConfigError("plate too small for its glyph strokes", "char_count");
    for (int i = 0; i < n; ++i) widths.push_back(ink_w / n + (i < ink_w % n ? 1 : 0));
  }
  int used = -gap;
  for (const int w : widths) used += w + gap;

  const int left = area.x + (area.w - (spec.char_count * pitch - glyph_gap)) / 2;
  const int partial_h = area.h * 65 / 100;
  const int strokes = static_cast<int>(widths.size());
  for (int g = 0; g < spec.char_count; ++g) {
    const int gx = left + g * pitch + (glyph_w - used) / 2;
    const int full = uniform(rng, 0, strokes - 1);
    int sx = gx;
    for (int s = 0; s < strokes; ++s) {
      const int shape = s == full ? 0 : uniform(rng, 0, 4);  // 0-2 full, 3 top, 4 bottom
      Rect r{sx, area.y, widths[s], area.h};
      if (shape == 3) r.h = partial_h;
      if (shape == 4) r = {sx, area.bottom() - partial_h, widths[s], partial_h};
      fill_rect(img, r, ink);
      sx += widths[s] + gap;
    }
    // Optional horizontal bars joining the strokes.
    const int bar = widths.front();
    for (const int row : {area.y, area.y + (area.h - bar) / 2, area.bottom() - bar}) {
      if (uniform(rng, 0, 2) == 0) fill_rect(img, {gx, row, used, bar}, ink);
    }
  }
}

inline void draw_ellipse(RgbImage& img, int cx, int cy, int a, int b, Rgb c) {
  const std::int64_t a2 = static_cast<std::int64_t>(a) * a;
  const std::int64_t b2 = static_cast<std::int64_t>(b) * b;
  for (int dy = -b; dy <= b; ++dy) {
    for (int dx = -a; dx <= a; ++dx) {
      if (dx * dx * b2 + dy * dy * a2 <= a2 * b2 && img.contains(cx + dx, cy + dy)) {
        img(cx + dx, cy + dy) = c;
      }
    }
  }
}

}  // namespace detail

/// Picks plate geometry, glyph count and background for `seed`.
inline SceneSpec random_scene_spec(std::uint64_t seed, int distractors = 2,
                                   ImageSize size = {640, 480}) {
  std::mt19937_64 rng(seed);
  SceneSpec spec;
  spec.seed = seed;
  spec.image_size = size;
  spec.distractors = distractors;
  const int max_w = std::min(200, size.width * 6 / 10);
  const int w = detail::uniform(rng, std::min(120, max_w), max_w);
  const int aspect_tenths = detail::uniform(rng, 30, 45);
  const int h = std::max(24, (w * 10 + aspect_tenths / 2) / aspect_tenths);
  spec.plate_rect = {detail::uniform(rng, 10, size.width - w - 10),
                     detail::uniform(rng, 10, size.height - h - 10), w, h};
  spec.char_count = detail::uniform(rng, 5, 8);
  spec.background_level = detail::uniform(rng, 80, 170);
  return spec;
}

inline Scene synth_scene(const SceneSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 1);
  const int bg = spec.background_level;
  Rgb background{detail::clamp_level(bg + detail::uniform(rng, -8, 8)),
                 detail::clamp_level(bg + detail::uniform(rng, -8, 8)),
                 detail::clamp_level(bg + detail::uniform(rng, -8, 8))};
  RgbImage img(spec.image_size.width, spec.image_size.height, background);

  const int fill = detail::uniform(rng, 205, 245);
  const int ink = detail::uniform(rng, 0, std::max(0, std::min(45, bg - 40)));
  detail::fill_rect(img, spec.plate_rect, detail::gray(fill));
  detail::draw_glyphs(img, spec, rng, detail::gray(ink));

  constexpr int kSeparation = 16;
  constexpr int kEdgeMargin = 8;
  std::vector<Rect> occupied{detail::grow(spec.plate_rect, kSeparation)};
  auto place = [&](int w, int h, Rect& out) {
    if (w + 2 * kEdgeMargin > img.width() || h + 2 * kEdgeMargin > img.height()) return false;
    for (int attempt = 0; attempt < 200; ++attempt) {
      const Rect r{detail::uniform(rng, kEdgeMargin, img.width() - w - kEdgeMargin),
                   detail::uniform(rng, kEdgeMargin, img.height() - h - kEdgeMargin), w, h};
      const bool clear = std::none_of(occupied.begin(), occupied.end(),
                                      [&](const Rect& o) { return intersection_area(o, r) > 0; });
      if (clear) {
        occupied.push_back(detail::grow(r, kSeparation));
        out = r;
        return true;
      }
    }
    return false;
  };

  for (int k = 0; k < spec.distractors; ++k) {
    Rect r;
    if (k % 2 == 0) {
      const int a = detail::uniform(rng, spec.plate_rect.w * 35 / 100, spec.plate_rect.w * 50 / 100);
      const int b = std::max(4, a * 10 / detail::uniform(rng, 20, 30));
      int level = 0;
      do {
        level = detail::uniform(rng, 0, 255);
      } while (level > bg - 60 && level < bg + 60);
      if (place(2 * a + 1, 2 * b + 1, r)) detail::draw_ellipse(img, r.x + a, r.y + b, a, b, detail::gray(level));
    } else {
      const int side = detail::uniform(rng, 30, 70);
      const int other = side * detail::uniform(rng, 75, 135) / 100;
      if (place(side, other, r)) {
        for (int y = r.y; y < r.bottom(); ++y) {
          for (int x = r.x; x < r.right(); ++x) img(x, y) = detail::gray(detail::uniform(rng, 0, 255));
        }
      }
    }
  }
  return Scene{std::move(img), spec.plate_rect};
}

}  // namespace lpd
