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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpd/error.hpp"
#include "lpd/raster.hpp"

namespace lpd {

/// Unweighted channel mean, floor((r + g + b) / 3).
inline GrayImage to_grayscale(const RgbImage& image) {
  std::vector<std::uint8_t> out;
  out.reserve(image.size());
  for (const Rgb& px : image.pixels()) {
    out.push_back(static_cast<std::uint8_t>((unsigned{px.r} + px.g + px.b) / 3));
  }
  return GrayImage(image.width(), image.height(), std::move(out));
}

struct Histogram256 {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;  // height * width of the source image

  double probability(int value) const {
    return total == 0 ? 0.0 : static_cast<double>(counts[value]) / static_cast<double>(total);
  }

  friend bool operator==(const Histogram256&, const Histogram256&) = default;
};

inline Histogram256 compute_histogram(const GrayImage& image) {
  Histogram256 hist;
  for (const std::uint8_t v : image.pixels()) ++hist.counts[v];
  hist.total = image.size();
  return hist;
}

/// Monotone intensity remapping map[v] = round(255 * CDF(v)).
struct EqualizationLut {
  static constexpr int kLevels = 256;

  std::array<std::uint8_t, kLevels> map{};

  std::uint8_t operator[](std::uint8_t v) const { return map[v]; }

  friend bool operator==(const EqualizationLut&, const EqualizationLut&) = default;
};

/// Builds the equalization table from the cumulative distribution. Rounding is
/// half away from zero, computed in integers: (2 * 255 * cum + total) / (2 * total).
inline EqualizationLut equalization_lut(const Histogram256& hist) {
  if (hist.total == 0) throw EmptyImageError("equalization of an empty histogram");
  constexpr std::uint64_t kMax = EqualizationLut::kLevels - 1;
  EqualizationLut lut;
  std::uint64_t cumulative = 0;
  for (int v = 0; v < EqualizationLut::kLevels; ++v) {
    cumulative += hist.counts[v];
    lut.map[v] =
        static_cast<std::uint8_t>((2 * kMax * cumulative + hist.total) / (2 * hist.total));
  }
  return lut;
}

inline GrayImage apply_lut(const GrayImage& image, const EqualizationLut& lut) {
  GrayImage out = image;
  for (std::uint8_t& v : out.pixels()) v = lut[v];
  return out;
}

inline GrayImage equalize(const GrayImage& image) {
  return apply_lut(image, equalization_lut(compute_histogram(image)));
}

struct BlurConfig {
  int mask_size = 3;

  // Checks the mask alone; `validate_for` also checks it against an image.
  void validate() const {
    if (mask_size < 1 || mask_size % 2 == 0) {
      throw ConfigError("blur mask size must be odd and >= 1, got " + std::to_string(mask_size),
                        "blur.mask_size");
    }
  }

  void validate_for(int width, int height) const {
    validate();
    if (mask_size > width || mask_size > height) {
      throw ConfigError("blur mask size " + std::to_string(mask_size) + " exceeds image " +
                            std::to_string(width) + "x" + std::to_string(height),
                        "blur.mask_size");
    }
  }

  friend bool operator==(const BlurConfig&, const BlurConfig&) = default;
};

/// Mean filter over a square mask centred on each pixel. Near the border only
/// in-bounds pixels contribute and the sum is divided by their count (floor).
inline GrayImage box_blur(const GrayImage& image, const BlurConfig& config) {
  config.validate_for(image.width(), image.height());
  const int w = image.width();
  const int h = image.height();
  const int radius = config.mask_size / 2;

  // Summed-area table with a zero row and column in front.
  const std::size_t stride = static_cast<std::size_t>(w) + 1;
  std::vector<std::uint64_t> sat(stride * (static_cast<std::size_t>(h) + 1), 0);
  for (int y = 0; y < h; ++y) {
    std::uint64_t row_sum = 0;
    for (int x = 0; x < w; ++x) {
      row_sum += image(x, y);
      sat[(y + 1) * stride + (x + 1)] = sat[y * stride + (x + 1)] + row_sum;
    }
  }

  GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    const int y0 = std::max(0, y - radius);
    const int y1 = std::min(h, y + radius + 1);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - radius);
      const int x1 = std::min(w, x + radius + 1);
      const std::uint64_t sum = sat[y1 * stride + x1] - sat[y0 * stride + x1] -
                                sat[y1 * stride + x0] + sat[y0 * stride + x0];
      const auto count = static_cast<std::uint64_t>(x1 - x0) * static_cast<std::uint64_t>(y1 - y0);
      out(x, y) = static_cast<std::uint8_t>(sum / count);
    }
  }
  return out;
}

}  // namespace lpd
