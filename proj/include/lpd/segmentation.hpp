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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lpd/error.hpp"
#include "lpd/ratio.hpp"
#include "lpd/raster.hpp"

namespace lpd {

enum class Connectivity { kFour = 4, kEight = 8 };

/// A connected foreground region and the features the plate filter consumes.
struct Blob {
  std::uint32_t label = 0;
  Rect bbox;
  std::uint64_t area = 0;
  std::uint64_t sum_x = 0;  // Σ x over member pixels
  std::uint64_t sum_y = 0;

  Ratio centroid_x() const { return {sum_x, area}; }
  Ratio centroid_y() const { return {sum_y, area}; }
  Ratio edge_density() const { return {area, static_cast<std::uint64_t>(bbox.area())}; }

  friend bool operator==(const Blob&, const Blob&) = default;
};

struct Labeling {
  LabelImage labels;        // 0 = background, k = blob with label k
  std::vector<Blob> blobs;  // sorted by (bbox.y, bbox.x, label)
};

namespace detail {

class DisjointSet {
 public:
  std::uint32_t make() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    return parent_.back();
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace detail

/// Two-pass union-find labeling. Labels are 1..n in raster-scan order of each
/// component's first pixel.
inline Labeling label_image(const BinaryImage& image, Connectivity conn = Connectivity::kEight) {
  const int w = image.width();
  const int h = image.height();
  LabelImage provisional(w, h, 0u);
  detail::DisjointSet sets;
  sets.make();  // slot 0 is background

  const bool eight = conn == Connectivity::kEight;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!image.foreground(x, y)) continue;
      std::uint32_t neighbours[4];
      int n = 0;
      auto take = [&](int nx, int ny) {
        if (image.contains(nx, ny) && provisional(nx, ny) != 0) neighbours[n++] = provisional(nx, ny);
      };
      take(x - 1, y);
      take(x, y - 1);
      if (eight) {
        take(x - 1, y - 1);
        take(x + 1, y - 1);
      }
      if (n == 0) {
        provisional(x, y) = sets.make();
        continue;
      }
      std::uint32_t chosen = neighbours[0];
      for (int i = 1; i < n; ++i) {
        sets.unite(chosen, neighbours[i]);
        chosen = std::min(chosen, neighbours[i]);
      }
      provisional(x, y) = chosen;
    }
  }

  LabelImage labels(w, h, 0u);
  std::vector<std::uint32_t> final_label;  // root -> final label
  std::vector<Blob> blobs;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (provisional(x, y) == 0) continue;
      const std::uint32_t root = sets.find(provisional(x, y));
      if (root >= final_label.size()) final_label.resize(root + 1, 0);
      if (final_label[root] == 0) {
        blobs.push_back(Blob{static_cast<std::uint32_t>(blobs.size() + 1), Rect{x, y, 1, 1}, 0, 0, 0});
        final_label[root] = blobs.back().label;
      }
      const std::uint32_t label = final_label[root];
      labels(x, y) = label;
      Blob& blob = blobs[label - 1];
      const int x0 = std::min(blob.bbox.x, x);
      const int x1 = std::max(blob.bbox.right(), x + 1);
      const int y1 = std::max(blob.bbox.bottom(), y + 1);
      blob.bbox = Rect{x0, blob.bbox.y, x1 - x0, y1 - blob.bbox.y};
      ++blob.area;
      blob.sum_x += static_cast<std::uint64_t>(x);
      blob.sum_y += static_cast<std::uint64_t>(y);
    }
  }

  std::sort(blobs.begin(), blobs.end(), [](const Blob& a, const Blob& b) {
    return std::tie(a.bbox.y, a.bbox.x, a.label) < std::tie(b.bbox.y, b.bbox.x, b.label);
  });
  return Labeling{std::move(labels), std::move(blobs)};
}

inline std::vector<Blob> label_components(const BinaryImage& image,
                                          Connectivity conn = Connectivity::kEight) {
  return label_image(image, conn).blobs;
}

/// Fully saturated colour whose hue advances by the golden angle per label.
/// Integer arithmetic only, so renders are identical on every platform.
inline Rgb palette_color(std::uint32_t label) {
  constexpr std::uint64_t kGoldenAngleMilliDeg = 137508;
  constexpr std::uint64_t kFullTurn = 360000;
  constexpr std::uint64_t kSector = 60000;
  const std::uint64_t hue = (static_cast<std::uint64_t>(label) * kGoldenAngleMilliDeg) % kFullTurn;
  const auto rising = static_cast<std::uint8_t>(255 * (hue % kSector) / kSector);
  const auto falling = static_cast<std::uint8_t>(255 - rising);
  switch (hue / kSector) {
    case 0: return {255, rising, 0};
    case 1: return {falling, 255, 0};
    case 2: return {0, 255, rising};
    case 3: return {0, falling, 255};
    case 4: return {rising, 0, 255};
    default: return {255, 0, falling};
  }
}

/// Paints each labelled pixel with its label's palette colour on black.
/// Throws ConsistencyError if `labels` does not match `blobs` or the size.
inline RgbImage render_components(const std::vector<Blob>& blobs, const LabelImage& labels,
                                  int width, int height) {
  if (labels.width() != width || labels.height() != height) {
    throw ConsistencyError("label raster is " + std::to_string(labels.width()) + "x" +
                           std::to_string(labels.height()) + ", expected " +
                           std::to_string(width) + "x" + std::to_string(height));
  }
  std::uint32_t max_label = 0;
  for (const Blob& b : blobs) max_label = std::max(max_label, b.label);
  std::vector<std::optional<std::uint64_t>> expected_area(static_cast<std::size_t>(max_label) + 1);
  for (const Blob& b : blobs) {
    if (b.label == 0 || expected_area[b.label]) {
      throw ConsistencyError("blob label " + std::to_string(b.label) + " is zero or duplicated");
    }
    expected_area[b.label] = b.area;
  }

  std::vector<std::uint64_t> seen(expected_area.size(), 0);
  RgbImage out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const std::uint32_t label = labels(x, y);
      if (label == 0) continue;
      if (label >= expected_area.size() || !expected_area[label]) {
        throw ConsistencyError("label " + std::to_string(label) + " at (" + std::to_string(x) +
                               ", " + std::to_string(y) + ") has no blob");
      }
      ++seen[label];
      out(x, y) = palette_color(label);
    }
  }
  for (const Blob& b : blobs) {
    if (seen[b.label] != b.area) {
      throw ConsistencyError("blob " + std::to_string(b.label) + " has area " +
                             std::to_string(b.area) + " but " + std::to_string(seen[b.label]) +
                             " labelled pixels");
    }
  }
  return out;
}

}  // namespace lpd
