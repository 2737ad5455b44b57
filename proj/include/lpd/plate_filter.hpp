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

// Candidate selection over segmented blobs.
//
// Blobs first pass a chain of geometric predicates (location, width, height,
// aspect ratio, area). Survivors are then scored by
//
//     score = edge_density * area / max_area
//
// where max_area is taken over the surviving candidates. Character strokes
// make a plate region nearly solid after dilation, while an emblem of similar
// outline leaves a hollow ring, so density separates the two; the area term
// keeps small dense specks from winning.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpd/error.hpp"
#include "lpd/ratio.hpp"
#include "lpd/raster.hpp"
#include "lpd/segmentation.hpp"

namespace lpd {

/// All bounds inclusive.
struct FilterConfig {
  int min_w = 60;
  int max_w = 300;
  int min_h = 15;
  int max_h = 100;
  double ratio_min = 2.0;
  double ratio_max = 6.0;
  int border_margin = 2;
  std::int64_t area_min = 400;
  std::int64_t area_max = 20000;

  void validate() const {
    auto pair = [](auto lo, auto hi, const char* lo_key, const char* hi_key) {
      if (lo > hi) throw ConfigError(std::string("must not exceed ") + hi_key, lo_key);
    };
    pair(min_w, max_w, "filter.min_w", "filter.max_w");
    pair(min_h, max_h, "filter.min_h", "filter.max_h");
    pair(ratio_min, ratio_max, "filter.ratio_min", "filter.ratio_max");
    pair(area_min, area_max, "filter.area_min", "filter.area_max");
    if (!(ratio_min > 0.0)) throw ConfigError("must be > 0", "filter.ratio_min");
    if (border_margin < 0) throw ConfigError("must be >= 0", "filter.border_margin");
  }

  friend bool operator==(const FilterConfig&, const FilterConfig&) = default;
};

/// One named geometric predicate of the heuristic chain.
struct HeuristicRule {
  const char* name;
  std::function<bool(const Blob&, const FilterConfig&, ImageSize)> keep;
};

inline const std::vector<HeuristicRule>& heuristic_rules() {
  static const std::vector<HeuristicRule> rules = {
      {"location",
       [](const Blob& b, const FilterConfig& c, ImageSize size) {
         const int m = c.border_margin;
         return b.bbox.x >= m && b.bbox.y >= m && size.width - b.bbox.right() >= m &&
                size.height - b.bbox.bottom() >= m;
       }},
      {"width",
       [](const Blob& b, const FilterConfig& c, ImageSize) {
         return c.min_w <= b.bbox.w && b.bbox.w <= c.max_w;
       }},
      {"height",
       [](const Blob& b, const FilterConfig& c, ImageSize) {
         return c.min_h <= b.bbox.h && b.bbox.h <= c.max_h;
       }},
      {"ratio",
       [](const Blob& b, const FilterConfig& c, ImageSize) {
         const double ratio = static_cast<double>(b.bbox.w) / static_cast<double>(b.bbox.h);
         return c.ratio_min <= ratio && ratio <= c.ratio_max;
       }},
      {"area",
       [](const Blob& b, const FilterConfig& c, ImageSize) {
         const auto area = static_cast<std::int64_t>(b.area);
         return c.area_min <= area && area <= c.area_max;
       }},
  };
  return rules;
}

struct StageCount {
  std::string stage;
  std::size_t survivors = 0;

  friend bool operator==(const StageCount&, const StageCount&) = default;
};

struct HeuristicResult {
  std::vector<Blob> survivors;
  std::vector<StageCount> stages;  // one entry per rule, in chain order
};

/// Applies the rules in order, recording how many blobs survive each one.
inline HeuristicResult filter_stages(std::vector<Blob> blobs, const FilterConfig& config,
                                     ImageSize image_size) {
  HeuristicResult result;
  for (const HeuristicRule& rule : heuristic_rules()) {
    std::erase_if(blobs, [&](const Blob& b) { return !rule.keep(b, config, image_size); });
    result.stages.push_back({rule.name, blobs.size()});
  }
  result.survivors = std::move(blobs);
  return result;
}

inline std::vector<Blob> filter_heuristic(std::vector<Blob> blobs, const FilterConfig& config,
                                          ImageSize image_size) {
  return filter_stages(std::move(blobs), config, image_size).survivors;
}

struct CandidateScore {
  Blob blob;
  Ratio score;  // edge_density * area / max candidate area, in (0, 1]

  friend bool operator==(const CandidateScore&, const CandidateScore&) = default;
};

inline std::vector<CandidateScore> score_candidates(const std::vector<Blob>& blobs) {
  if (blobs.empty()) throw NoCandidatesError("no candidates to score");
  std::uint64_t max_area = 0;
  for (const Blob& b : blobs) max_area = std::max(max_area, b.area);
  std::vector<CandidateScore> scored;
  scored.reserve(blobs.size());
  for (const Blob& b : blobs) {
    const auto box = static_cast<std::uint64_t>(b.bbox.area());
    scored.push_back({b, Ratio{b.area * b.area, box * max_area}});
  }
  return scored;
}

/// Highest score wins; ties go to the smaller (bbox.y, bbox.x, label).
inline std::optional<Blob> select_plate(const std::vector<CandidateScore>& scored) {
  if (scored.empty()) return std::nullopt;
  auto better = [](const CandidateScore& a, const CandidateScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.blob.bbox.y, a.blob.bbox.x, a.blob.label) <
           std::tie(b.blob.bbox.y, b.blob.bbox.x, b.blob.label);
  };
  const CandidateScore* best = &scored.front();
  for (const CandidateScore& c : scored) {
    if (better(c, *best)) best = &c;
  }
  return best->blob;
}

/// `bbox` grown by `margin` on every side and clamped to the image.
inline Rect expand_clamped(const Rect& bbox, int margin, ImageSize size) {
  const int x0 = std::max(0, bbox.x - margin);
  const int y0 = std::max(0, bbox.y - margin);
  const int x1 = std::min(size.width, bbox.right() + margin);
  const int y1 = std::min(size.height, bbox.bottom() + margin);
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

inline RgbImage extract_plate(const RgbImage& original, const Blob& winner, int margin) {
  if (winner.bbox.w < 1 || winner.bbox.h < 1) {
    throw BoundsError("degenerate plate box " + to_string(winner.bbox), winner.bbox.x,
                      winner.bbox.y);
  }
  if (margin < 0) throw BoundsError("negative extraction margin", winner.bbox.x, winner.bbox.y);
  return crop(original,
              expand_clamped(winner.bbox, margin, {original.width(), original.height()}));
}

}  // namespace lpd
