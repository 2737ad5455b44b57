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
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpd/error.hpp"
#include "lpd/raster.hpp"

namespace lpd {

/// 3x3 neighbourhood, row-major: z[0] is top-left (z1), z[4] the centre (z5),
/// z[8] bottom-right (z9).
struct ConvWindow {
  std::array<int, 9> z{};

  // Caller guarantees (x, y) is an interior pixel.
  static ConvWindow at(const GrayImage& image, int x, int y) {
    ConvWindow win;
    int i = 0;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) win.z[i++] = image(x + dx, y + dy);
    }
    return win;
  }

  int z1() const { return z[0]; }
  int z2() const { return z[1]; }
  int z3() const { return z[2]; }
  int z4() const { return z[3]; }
  int z6() const { return z[5]; }
  int z7() const { return z[6]; }
  int z8() const { return z[7]; }
  int z9() const { return z[8]; }

  // Bottom row minus top row.
  int gx() const { return (z7() + 2 * z8() + z9()) - (z1() + 2 * z2() + z3()); }
  // Right column minus left column.
  int gy() const { return (z3() + 2 * z6() + z9()) - (z1() + 2 * z4() + z7()); }
  int magnitude() const { return std::abs(gx()) + std::abs(gy()); }

  int left_column_sum() const { return z1() + z4() + z7(); }
  int right_column_sum() const { return z3() + z6() + z9(); }
};

enum class EdgeMode { kVerticalDiff, kSobel };

inline constexpr int kMaxVerticalDiffThreshold = 255;
inline constexpr int kMaxSobelThreshold = 2040;

inline std::string_view to_string(EdgeMode mode) {
  return mode == EdgeMode::kSobel ? "sobel" : "vertical-diff";
}

inline std::optional<EdgeMode> parse_edge_mode(std::string_view text) {
  if (text == "vertical-diff") return EdgeMode::kVerticalDiff;
  if (text == "sobel") return EdgeMode::kSobel;
  return std::nullopt;
}

struct EdgeConfig {
  EdgeMode mode = EdgeMode::kVerticalDiff;
  int threshold = 40;

  void validate() const {
    const int max = mode == EdgeMode::kSobel ? kMaxSobelThreshold : kMaxVerticalDiffThreshold;
    if (threshold < 0 || threshold > max) {
      throw ConfigError(std::string(to_string(mode)) + " threshold must be in 0.." +
                            std::to_string(max) + ", got " + std::to_string(threshold),
                        "edge.threshold");
    }
  }

  friend bool operator==(const EdgeConfig&, const EdgeConfig&) = default;
};

namespace detail {

template <typename Fires>
BinaryImage scan_interior(const GrayImage& image, Fires&& fires) {
  if (image.width() < 3 || image.height() < 3) {
    throw SizeError("edge detection needs at least 3x3 pixels, got " +
                    std::to_string(image.width()) + "x" + std::to_string(image.height()));
  }
  BinaryImage out(image.width(), image.height());
  for (int y = 1; y + 1 < image.height(); ++y) {
    for (int x = 1; x + 1 < image.width(); ++x) {
      if (fires(ConvWindow::at(image, x, y))) out.set(x, y, true);
    }
  }
  return out;
}

inline void require_mode(const EdgeConfig& config, EdgeMode mode) {
  config.validate();
  if (config.mode != mode) {
    throw ConfigError("detector requires mode " + std::string(to_string(mode)), "edge.mode");
  }
}

}  // namespace detail

/// Marks a pixel when the mean of its left window column differs from the mean
/// of its right column by more than the threshold. Means are compared as
/// column sums against 3 * threshold. The one-pixel frame stays 0.
inline BinaryImage vertical_edge_detect(const GrayImage& image, const EdgeConfig& config) {
  detail::require_mode(config, EdgeMode::kVerticalDiff);
  const int limit = 3 * config.threshold;
  return detail::scan_interior(image, [limit](const ConvWindow& win) {
    return std::abs(win.left_column_sum() - win.right_column_sum()) > limit;
  });
}

/// Marks a pixel when |Gx| + |Gy| exceeds the threshold. The one-pixel frame stays 0.
inline BinaryImage sobel_edge_detect(const GrayImage& image, const EdgeConfig& config) {
  detail::require_mode(config, EdgeMode::kSobel);
  const int limit = config.threshold;
  return detail::scan_interior(
      image, [limit](const ConvWindow& win) { return win.magnitude() > limit; });
}

inline BinaryImage edge_detect(const GrayImage& image, const EdgeConfig& config) {
  return config.mode == EdgeMode::kSobel ? sobel_edge_detect(image, config)
                                         : vertical_edge_detect(image, config);
}

struct MorphConfig {
  int mask_size = 3;
  int iterations = 2;

  void validate() const {
    if (mask_size < 3 || mask_size % 2 == 0) {
      throw ConfigError("dilation mask size must be odd and >= 3, got " +
                            std::to_string(mask_size),
                        "morph.mask_size");
    }
    if (iterations < 1) {
      throw ConfigError("dilation iterations must be >= 1, got " + std::to_string(iterations),
                        "morph.iterations");
    }
  }

  friend bool operator==(const MorphConfig&, const MorphConfig&) = default;
};

namespace detail {

// One square dilation pass, separable: horizontal then vertical running counts.
inline BinaryImage dilate_once(const BinaryImage& image, int radius) {
  const int w = image.width();
  const int h = image.height();
  std::vector<std::uint8_t> horizontal(static_cast<std::size_t>(w) * h, 0);
  std::vector<int> prefix(static_cast<std::size_t>(std::max(w, h)) + 1);

  for (int y = 0; y < h; ++y) {
    prefix[0] = 0;
    for (int x = 0; x < w; ++x) prefix[x + 1] = prefix[x] + (image.foreground(x, y) ? 1 : 0);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - radius);
      const int x1 = std::min(w, x + radius + 1);
      horizontal[static_cast<std::size_t>(y) * w + x] = prefix[x1] - prefix[x0] > 0;
    }
  }

  BinaryImage out(w, h);
  for (int x = 0; x < w; ++x) {
    prefix[0] = 0;
    for (int y = 0; y < h; ++y) {
      prefix[y + 1] = prefix[y] + horizontal[static_cast<std::size_t>(y) * w + x];
    }
    for (int y = 0; y < h; ++y) {
      const int y0 = std::max(0, y - radius);
      const int y1 = std::min(h, y + radius + 1);
      if (prefix[y1] - prefix[y0] > 0) out.set(x, y, true);
    }
  }
  return out;
}

}  // namespace detail

/// Binary dilation with a square neighbourhood (centre included), clipped at
/// the image border, applied `iterations` times.
inline BinaryImage dilate(const BinaryImage& image, const MorphConfig& config) {
  config.validate();
  BinaryImage out = image;
  for (int i = 0; i < config.iterations; ++i) out = detail::dilate_once(out, config.mask_size / 2);
  return out;
}

}  // namespace lpd
