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

// lpd: plate detection command line.
//
//   lpd detect <input> [--config PATH] [--dump-stages DIR] [--out PATH]
//   lpd sweep <input> --param KEY --values V1,V2,... [--config PATH]
//   lpd synth --seed N --out PATH [--distractors K] [--width W --height H]
//
// stdout carries only machine-readable output (report JSON, sweep TSV);
// diagnostics go to stderr. detect exits 0 when a plate was found, 2 when the
// pipeline ran without finding one, 1 on any error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpd/lpd.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitError = 1;
constexpr int kExitNoPlate = 2;

lpd::PipelineConfig load_config(const std::string& path) {
  return path.empty() ? lpd::PipelineConfig{} : lpd::parse_config(path);
}

int run_detect(const std::string& input, const std::string& config_path,
               const std::string& dump_dir, std::string out_path) {
  const lpd::RgbImage image = lpd::load_image(input);
  const lpd::PipelineConfig config = load_config(config_path);
  const lpd::PipelineResult result = lpd::run_pipeline(image, config, true);

  if (!dump_dir.empty()) {
    for (const auto& p : lpd::write_stage_dumps(*result.artifacts, dump_dir)) {
      std::cerr << "wrote " << p.string() << "\n";
    }
  }
  std::cout << lpd::report_to_json(result.report);
  if (!result.report.found()) {
    std::cerr << "no plate found\n";
    return kExitNoPlate;
  }
  if (out_path.empty()) out_path = input + ".plate.ppm";
  lpd::save_rgb(*result.artifacts->plate, out_path);
  std::cerr << "plate " << lpd::to_string(result.report.winner->bbox) << " written to " << out_path
            << "\n";
  return kExitFound;
}

int run_sweep(const std::string& input, const std::string& config_path, const std::string& param,
              const std::vector<std::string>& values) {
  const lpd::RgbImage image = lpd::load_image(input);
  const lpd::PipelineConfig config = load_config(config_path);
  std::cout << lpd::format_sweep_tsv(lpd::sweep(image, config, param, values));
  return 0;
}

int run_synth(std::uint64_t seed, const std::string& out, int distractors, int width, int height) {
  const lpd::SceneSpec spec = lpd::random_scene_spec(seed, distractors, {width, height});
  const lpd::Scene scene = lpd::synth_scene(spec);
  lpd::save_rgb(scene.image, out);
  const lpd::Rect& t = scene.truth;
  const std::string truth = std::to_string(t.x) + " " + std::to_string(t.y) + " " +
                            std::to_string(t.w) + " " + std::to_string(t.h) + "\n";
  lpd::write_file(out + ".truth", std::span(reinterpret_cast<const std::uint8_t*>(truth.data()),
                                            truth.size()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"License plate localisation pipeline"};
  app.require_subcommand(1);

  std::string input;
  std::string config_path;
  std::string dump_dir;
  std::string out_path;
  auto* detect = app.add_subcommand("detect", "Locate and crop the plate in an image");
  detect->add_option("input", input, "PNG, PPM (P6) or PGM (P5) image")->required();
  detect->add_option("--config", config_path, "key=value configuration file");
  detect->add_option("--dump-stages", dump_dir, "Directory for per-stage images");
  detect->add_option("--out", out_path, "Plate crop destination (default <input>.plate.ppm)");

  std::string param;
  std::vector<std::string> values;
  auto* sweep = app.add_subcommand("sweep", "Run the pipeline over values of one parameter");
  sweep->add_option("input", input, "Input image")->required();
  sweep->add_option("--param", param, "Dotted config key, e.g. morph.mask_size")->required();
  sweep->add_option("--values", values, "Comma-separated values")->delimiter(',')->required();
  sweep->add_option("--config", config_path, "Base configuration file");

  std::uint64_t seed = 0;
  int distractors = 2;
  int width = 640;
  int height = 480;
  auto* synth = app.add_subcommand("synth", "Write a synthetic scene and its ground truth");
  synth->add_option("--seed", seed, "Scene seed")->required();
  synth->add_option("--out", out_path, "Output PPM path")->required();
  synth->add_option("--distractors", distractors, "Logo/texture distractor count")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--width", width, "Image width")->check(CLI::Range(64, 8192));
  synth->add_option("--height", height, "Image height")->check(CLI::Range(64, 8192));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cerr, std::cerr);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*detect) return run_detect(input, config_path, dump_dir, out_path);
    if (*sweep) return run_sweep(input, config_path, param, values);
    if (*synth) return run_synth(seed, out_path, distractors, width, height);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
