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

// Pipeline configuration and its text format.
//
// One `key=value` per line, dotted keys, '#' starts a comment, blank lines
// ignored. Keys not present keep their defaults; unknown keys are an error.
//
//     blur.mask_size=3
//     edge.mode=vertical-diff      # or sobel
//     edge.threshold=40
//     morph.mask_size=3
//     morph.iterations=2
//     connectivity=8               # or 4
//     filter.min_w=60   filter.max_w=300
//     filter.min_h=15   filter.max_h=100
//     filter.ratio_min=2   filter.ratio_max=6
//     filter.border_margin=2
//     filter.area_min=400   filter.area_max=20000
//     extract_margin=2

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lpd/edge_morph.hpp"
#include "lpd/error.hpp"
#include "lpd/image_io.hpp"
#include "lpd/plate_filter.hpp"
#include "lpd/preprocess.hpp"
#include "lpd/segmentation.hpp"

namespace lpd {

struct PipelineConfig {
  BlurConfig blur;
  EdgeConfig edge;
  MorphConfig morph;
  Connectivity connectivity = Connectivity::kEight;
  FilterConfig filter;
  int extract_margin = 2;

  void validate() const {
    blur.validate();
    edge.validate();
    morph.validate();
    filter.validate();
    if (extract_margin < 0) throw ConfigError("must be >= 0", "extract_margin");
  }

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view text) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("expected an integer, got '" + std::string(text) + "'", std::string(key));
  }
  return value;
}

inline double parse_real(std::string_view key, std::string_view text) {
  // from_chars for double is missing from older libstdc++; strtod on a copy.
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(value)) {
    throw ConfigError("expected a number, got '" + copy + "'", std::string(key));
  }
  return value;
}

// Shortest decimal form that parses back to the same double.
inline std::string format_real(double v) {
  std::string text;
  for (int p = 1; p <= std::numeric_limits<double>::max_digits10; ++p) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(p);
    os << v;
    text = os.str();
    if (std::strtod(text.c_str(), nullptr) == v) break;
  }
  return text;
}

struct ConfigField {
  const char* key;
  bool numeric;
  std::function<void(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

template <typename Int>
ConfigField int_field(const char* key, Int PipelineConfig::*outer) {
  return {key, true,
          [key, outer](PipelineConfig& c, std::string_view v) { c.*outer = parse_integer<Int>(key, v); },
          [outer](const PipelineConfig& c) { return std::to_string(c.*outer); }};
}

template <typename Sub, typename Int>
ConfigField int_field(const char* key, Sub PipelineConfig::*outer, Int Sub::*inner) {
  return {key, true,
          [key, outer, inner](PipelineConfig& c, std::string_view v) {
            (c.*outer).*inner = parse_integer<Int>(key, v);
          },
          [outer, inner](const PipelineConfig& c) { return std::to_string((c.*outer).*inner); }};
}

inline ConfigField real_field(const char* key, double FilterConfig::*inner) {
  return {key, true,
          [key, inner](PipelineConfig& c, std::string_view v) { c.filter.*inner = parse_real(key, v); },
          [inner](const PipelineConfig& c) { return format_real(c.filter.*inner); }};
}

}  // namespace detail

/// Every configurable key, in canonical output order.
inline const std::vector<detail::ConfigField>& config_fields() {
  using detail::ConfigField;
  using detail::int_field;
  using detail::real_field;
  static const std::vector<ConfigField> fields = {
      int_field("blur.mask_size", &PipelineConfig::blur, &BlurConfig::mask_size),
      {"edge.mode", false,
       [](PipelineConfig& c, std::string_view v) {
         const auto mode = parse_edge_mode(v);
         if (!mode) {
           throw ConfigError("expected vertical-diff or sobel, got '" + std::string(v) + "'",
                             "edge.mode");
         }
         c.edge.mode = *mode;
       },
       [](const PipelineConfig& c) { return std::string(to_string(c.edge.mode)); }},
      int_field("edge.threshold", &PipelineConfig::edge, &EdgeConfig::threshold),
      int_field("morph.mask_size", &PipelineConfig::morph, &MorphConfig::mask_size),
      int_field("morph.iterations", &PipelineConfig::morph, &MorphConfig::iterations),
      {"connectivity", true,
       [](PipelineConfig& c, std::string_view v) {
         const int n = detail::parse_integer<int>("connectivity", v);
         if (n != 4 && n != 8) throw ConfigError("expected 4 or 8, got " + std::string(v), "connectivity");
         c.connectivity = n == 4 ? Connectivity::kFour : Connectivity::kEight;
       },
       [](const PipelineConfig& c) { return std::to_string(static_cast<int>(c.connectivity)); }},
      int_field("filter.min_w", &PipelineConfig::filter, &FilterConfig::min_w),
      int_field("filter.max_w", &PipelineConfig::filter, &FilterConfig::max_w),
      int_field("filter.min_h", &PipelineConfig::filter, &FilterConfig::min_h),
      int_field("filter.max_h", &PipelineConfig::filter, &FilterConfig::max_h),
      real_field("filter.ratio_min", &FilterConfig::ratio_min),
      real_field("filter.ratio_max", &FilterConfig::ratio_max),
      int_field("filter.border_margin", &PipelineConfig::filter, &FilterConfig::border_margin),
      int_field("filter.area_min", &PipelineConfig::filter, &FilterConfig::area_min),
      int_field("filter.area_max", &PipelineConfig::filter, &FilterConfig::area_max),
      int_field("extract_margin", &PipelineConfig::extract_margin),
  };
  return fields;
}

inline const detail::ConfigField* find_config_field(std::string_view key) {
  for (const auto& f : config_fields()) {
    if (key == f.key) return &f;
  }
  return nullptr;
}

inline bool is_numeric_config_key(std::string_view key) {
  const auto* field = find_config_field(key);
  return field != nullptr && field->numeric;
}

/// Sets one key without validating cross-field invariants.
inline void set_config_value(PipelineConfig& config, std::string_view key, std::string_view value) {
  const auto* field = find_config_field(key);
  if (field == nullptr) throw ConfigError("unknown key", std::string(key));
  field->set(config, detail::trim(value));
}

/// Sets one key and re-validates the whole config.
inline PipelineConfig with_value(PipelineConfig config, std::string_view key, std::string_view value) {
  set_config_value(config, key, value);
  config.validate();
  return config;
}

inline PipelineConfig parse_config_text(std::string_view text) {
  PipelineConfig config;
  std::vector<std::pair<std::string, int>> key_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("malformed line, expected key=value", std::string(line), line_no);
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    try {
      set_config_value(config, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(e.message(), key, line_no);
    }
    key_lines.emplace_back(key, line_no);
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    int line = 0;
    for (const auto& [key, n] : key_lines) {
      if (key == e.key()) line = n;
    }
    throw ConfigError(e.message(), e.key(), line);
  }
  return config;
}

inline PipelineConfig parse_config(const std::filesystem::path& path) {
  const Bytes data = read_file(path);
  return parse_config_text(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

/// Canonical text form; parse_config_text(format_config(c)) == c.
inline std::string format_config(const PipelineConfig& config) {
  std::string out;
  for (const auto& f : config_fields()) {
    out += f.key;
    out += '=';
    out += f.get(config);
    out += '\n';
  }
  return out;
}

}  // namespace lpd
