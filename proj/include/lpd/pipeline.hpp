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

// End-to-end plate localisation:
//
//   grayscale -> equalize -> blur -> edge -> dilate -> label
//     -> heuristic filter -> score/select -> extract
//
// A run is sequential; sweeps run independent configurations concurrently
// and report rows in input order.

#pragma once

#include <cstdint>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lpd/config.hpp"
#include "lpd/edge_morph.hpp"
#include "lpd/image_io.hpp"
#include "lpd/plate_filter.hpp"
#include "lpd/preprocess.hpp"
#include "lpd/raster.hpp"
#include "lpd/segmentation.hpp"

namespace lpd {

struct DetectionReport {
  ImageSize image_size;
  std::uint64_t edge_pixels = 0;
  std::vector<StageCount> stage_counts;  // "components", heuristic rules..., "selected"
  std::vector<CandidateScore> candidates;
  std::optional<Blob> winner;
  std::optional<Rect> plate_rect;  // winner box after margin expansion
  PipelineConfig config_used;

  bool found() const { return winner.has_value(); }
};

/// Intermediate images, one per stage, in pipeline order.
struct StageArtifacts {
  GrayImage gray;
  GrayImage equalized;
  GrayImage blurred;
  BinaryImage edges;
  BinaryImage dilated;
  RgbImage components;
  RgbImage candidates;
  std::optional<RgbImage> plate;
};

struct PipelineResult {
  DetectionReport report;
  std::optional<StageArtifacts> artifacts;
};

inline constexpr const char* kStageDumpNames[] = {
    "00-gray.pgm",   "01-equalized.pgm", "02-blur.pgm",       "03-edge.pgm",
    "04-dilated.pgm", "05-components.ppm", "06-candidates.ppm", "07-plate.ppm",
};

inline const Rgb kCandidateOutline{0, 255, 0};
inline const Rgb kWinnerOutline{255, 0, 0};

inline void draw_outline(RgbImage& image, const Rect& r, Rgb color) {
  for (int x = r.x; x < r.right(); ++x) {
    image(x, r.y) = color;
    image(x, r.bottom() - 1) = color;
  }
  for (int y = r.y; y < r.bottom(); ++y) {
    image(r.x, y) = color;
    image(r.right() - 1, y) = color;
  }
}

inline PipelineResult run_pipeline(const RgbImage& image, const PipelineConfig& config,
                                   bool keep_artifacts = false) {
  config.validate();
  const ImageSize size{image.width(), image.height()};

  GrayImage gray = to_grayscale(image);
  GrayImage equalized = equalize(gray);
  GrayImage blurred = box_blur(equalized, config.blur);
  BinaryImage edges = edge_detect(blurred, config.edge);
  BinaryImage dilated = dilate(edges, config.morph);
  Labeling labeling = label_image(dilated, config.connectivity);

  DetectionReport report;
  report.image_size = size;
  report.config_used = config;
  report.edge_pixels = edges.count_foreground();
  report.stage_counts.push_back({"components", labeling.blobs.size()});

  HeuristicResult heuristic = filter_stages(labeling.blobs, config.filter, size);
  report.stage_counts.insert(report.stage_counts.end(), heuristic.stages.begin(),
                             heuristic.stages.end());
  if (!heuristic.survivors.empty()) {
    report.candidates = score_candidates(heuristic.survivors);
    report.winner = select_plate(report.candidates);
  }
  report.stage_counts.push_back({"selected", report.winner ? 1u : 0u});

  std::optional<RgbImage> plate;
  if (report.winner) {
    report.plate_rect = expand_clamped(report.winner->bbox, config.extract_margin, size);
    plate = extract_plate(image, *report.winner, config.extract_margin);
  }

  PipelineResult result{std::move(report), std::nullopt};
  if (keep_artifacts) {
    RgbImage components =
        render_components(labeling.blobs, labeling.labels, size.width, size.height);
    RgbImage candidates = image;
    for (const Blob& b : heuristic.survivors) draw_outline(candidates, b.bbox, kCandidateOutline);
    if (result.report.winner) draw_outline(candidates, result.report.winner->bbox, kWinnerOutline);
    result.artifacts = StageArtifacts{std::move(gray),     std::move(equalized),  std::move(blurred),
                                      std::move(edges),    std::move(dilated),    std::move(components),
                                      std::move(candidates), std::move(plate)};
  }
  return result;
}

/// Writes the stage images into `dir` (created if missing). The plate crop is
/// written only when a plate was found.
inline std::vector<std::filesystem::path> write_stage_dumps(const StageArtifacts& a,
                                                            const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  auto out = [&](int index) {
    written.push_back(dir / kStageDumpNames[index]);
    return written.back();
  };
  save_gray(a.gray, out(0));
  save_gray(a.equalized, out(1));
  save_gray(a.blurred, out(2));
  save_binary(a.edges, out(3));
  save_binary(a.dilated, out(4));
  save_rgb(a.components, out(5));
  save_rgb(a.candidates, out(6));
  if (a.plate) save_rgb(*a.plate, out(7));
  return written;
}

namespace detail {

inline nlohmann::ordered_json rect_json(const Rect& r) {
  return {{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}};
}

inline nlohmann::ordered_json blob_json(const Blob& b) {
  return {{"label", b.label},
          {"bbox", rect_json(b.bbox)},
          {"area", b.area},
          {"centroid", {b.centroid_x().to_string(), b.centroid_y().to_string()}},
          {"edge_density", b.edge_density().to_string()}};
}

}  // namespace detail

/// Machine-readable report. Identical reports serialize to identical bytes.
inline std::string report_to_json(const DetectionReport& r) {
  nlohmann::ordered_json j;
  j["found"] = r.found();
  j["image"] = {{"width", r.image_size.width}, {"height", r.image_size.height}};
  j["edge_pixels"] = r.edge_pixels;
  auto& stages = j["stage_counts"] = nlohmann::ordered_json::array();
  for (const StageCount& s : r.stage_counts) stages.push_back({{"stage", s.stage}, {"survivors", s.survivors}});
  auto& cands = j["candidates"] = nlohmann::ordered_json::array();
  for (const CandidateScore& c : r.candidates) {
    auto entry = detail::blob_json(c.blob);
    entry["score"] = c.score.to_string();
    cands.push_back(std::move(entry));
  }
  j["winner"] = r.winner ? detail::blob_json(*r.winner) : nlohmann::ordered_json(nullptr);
  j["plate_rect"] = r.plate_rect ? detail::rect_json(*r.plate_rect) : nlohmann::ordered_json(nullptr);
  auto& cfg = j["config"] = nlohmann::ordered_json::object();
  for (const auto& f : config_fields()) cfg[f.key] = f.get(r.config_used);
  return j.dump(2) + "\n";
}

struct SweepRow {
  std::string value;
  std::uint64_t edge_pixels = 0;
  std::size_t blobs = 0;
  std::vector<StageCount> stages;  // heuristic rules only
  std::optional<Rect> winner;
};

struct SweepTable {
  std::string param;
  std::vector<SweepRow> rows;
};

/// Runs the pipeline once per value of `param`. Every value is validated before
/// any run starts; rows come back in the order of `values`.
inline SweepTable sweep(const RgbImage& image, const PipelineConfig& base, const std::string& param,
                        const std::vector<std::string>& values) {
  if (find_config_field(param) == nullptr) throw ConfigError("unknown sweep parameter", param);
  if (!is_numeric_config_key(param)) throw ConfigError("sweep parameter must be numeric", param);
  std::vector<PipelineConfig> configs;
  configs.reserve(values.size());
  for (const std::string& v : values) configs.push_back(with_value(base, param, v));

  std::vector<std::future<DetectionReport>> runs;
  runs.reserve(configs.size());
  for (const PipelineConfig& c : configs) {
    runs.push_back(std::async(std::launch::async,
                              [&image, c] { return run_pipeline(image, c).report; }));
  }

  SweepTable table{param, {}};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const DetectionReport report = runs[i].get();
    SweepRow row;
    row.value = values[i];
    row.edge_pixels = report.edge_pixels;
    row.blobs = report.stage_counts.front().survivors;
    row.stages.assign(report.stage_counts.begin() + 1, report.stage_counts.end() - 1);
    if (report.winner) row.winner = report.winner->bbox;
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Tab-separated table with a header row; winner as "x,y,w,h" or "none".
inline std::string format_sweep_tsv(const SweepTable& table) {
  std::string out = table.param + "\tedge_pixels\tblobs";
  for (const HeuristicRule& rule : heuristic_rules()) {
    out += '\t';
    out += rule.name;
  }
  out += "\twinner\n";
  for (const SweepRow& row : table.rows) {
    out += row.value + '\t' + std::to_string(row.edge_pixels) + '\t' + std::to_string(row.blobs);
    for (const StageCount& s : row.stages) out += '\t' + std::to_string(s.survivors);
    out += '\t' + (row.winner ? to_string(*row.winner) : std::string("none")) + '\n';
  }
  return out;
}

}  // namespace lpd
