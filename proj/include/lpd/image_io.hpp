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

// Image file I/O.
//
// Reading accepts binary PGM (P5), binary PPM (P6) and PNG, detected from the
// leading bytes rather than the file extension. PGM input is replicated to
// three channels. PNG alpha is discarded with a warning on stderr.
//
// Writing produces netpbm only, with the canonical header layout
// "P5\n<w> <h>\n255\n" (resp. P6) followed by the raw payload, so encoded
// files are byte-for-byte predictable.

#pragma once

#include <png.h>

#include <cctype>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpd/error.hpp"
#include "lpd/raster.hpp"

namespace lpd {

using Bytes = std::vector<std::uint8_t>;

namespace detail {

inline std::string describe_magic(std::span<const std::uint8_t> data) {
  std::string out;
  for (std::size_t i = 0; i < data.size() && i < 4; ++i) {
    const auto c = static_cast<unsigned char>(data[i]);
    if (std::isprint(c)) {
      out += static_cast<char>(c);
    } else {
      static constexpr char kHex[] = "0123456789abcdef";
      out += "\\x";
      out += kHex[c >> 4];
      out += kHex[c & 0xf];
    }
  }
  return out.empty() ? std::string("<empty>") : out;
}

// Cursor over a netpbm header: whitespace-separated ASCII tokens, '#' comments.
class PnmHeaderReader {
 public:
  PnmHeaderReader(std::span<const std::uint8_t> data, std::string magic)
      : data_(data), magic_(std::move(magic)) {}

  int next_int(const char* field) {
    skip_space_and_comments();
    if (pos_ >= data_.size() || !std::isdigit(data_[pos_])) {
      throw FormatError(magic_ + " header: missing or malformed " + std::string(field));
    }
    long long value = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      value = value * 10 + (data_[pos_] - '0');
      if (value > (1LL << 30)) throw FormatError(magic_ + " header: " + field + " too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  // Exactly one whitespace byte separates the maxval from the payload.
  std::size_t payload_offset() {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_])) {
      throw FormatError(magic_ + " header: expected single whitespace before payload");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> data_;
  std::string magic_;
  std::size_t pos_ = 2;
};

inline RgbImage decode_pnm(std::span<const std::uint8_t> data) {
  const bool gray = data[1] == '5';
  const std::string magic = gray ? "P5" : "P6";
  PnmHeaderReader header(data, magic);
  const int width = header.next_int("width");
  const int height = header.next_int("height");
  const int maxval = header.next_int("maxval");
  if (width < 1 || height < 1) {
    throw FormatError(magic + " header: invalid dimensions " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
  if (maxval != 255) {
    throw FormatError(magic + " header: maxval " + std::to_string(maxval) +
                      " unsupported, expected 255");
  }
  const std::size_t offset = header.payload_offset();
  const std::size_t channels = gray ? 1 : 3;
  const std::size_t expected =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
  if (data.size() < offset || data.size() - offset < expected) {
    throw FormatError(magic + " payload truncated: expected " + std::to_string(expected) +
                      " bytes, found " +
                      std::to_string(data.size() < offset ? 0 : data.size() - offset));
  }
  const std::uint8_t* p = data.data() + offset;
  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (auto& px : pixels) {
    if (gray) {
      px = {p[0], p[0], p[0]};
      p += 1;
    } else {
      px = {p[0], p[1], p[2]};
      p += 3;
    }
  }
  return RgbImage(width, height, std::move(pixels));
}

inline bool is_png(std::span<const std::uint8_t> data) {
  static constexpr std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  return data.size() >= 8 && std::memcmp(data.data(), kSignature, 8) == 0;
}

inline RgbImage decode_png(std::span<const std::uint8_t> data) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, data.data(), data.size())) {
    const std::string msg = png.message;
    png_image_free(&png);
    throw FormatError("PNG header: " + msg);
  }
  if (png.format & PNG_FORMAT_FLAG_ALPHA) {
    std::cerr << "warning: PNG alpha channel dropped\n";
  }
  // Reading as RGBA keeps color values unassociated; alpha is then discarded.
  png.format = PNG_FORMAT_RGBA;
  if (png.width < 1 || png.height < 1 || png.width > (1u << 15) || png.height > (1u << 15)) {
    png_image_free(&png);
    throw FormatError("PNG header: unsupported dimensions");
  }
  const int width = static_cast<int>(png.width);
  const int height = static_cast<int>(png.height);
  std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, rgba.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    throw FormatError("PNG payload: " + msg);
  }
  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = {rgba[4 * i], rgba[4 * i + 1], rgba[4 * i + 2]};
  }
  return RgbImage(width, height, std::move(pixels));
}

inline void append_header(Bytes& out, std::string_view magic, int width, int height) {
  const std::string header = std::string(magic) + "\n" + std::to_string(width) + " " +
                             std::to_string(height) + "\n255\n";
  out.insert(out.end(), header.begin(), header.end());
}

}  // namespace detail

/// Decodes PNG, P5 or P6 bytes. Throws FormatError naming the offending header.
inline RgbImage decode_image(std::span<const std::uint8_t> data) {
  if (detail::is_png(data)) return detail::decode_png(data);
  if (data.size() >= 2 && data[0] == 'P' && (data[1] == '5' || data[1] == '6')) {
    return detail::decode_pnm(data);
  }
  throw FormatError("unsupported image header '" + detail::describe_magic(data) +
                    "' (expected PNG, P5 or P6)");
}

inline Bytes encode_pgm(const GrayImage& image) {
  Bytes out;
  out.reserve(image.size() + 32);
  detail::append_header(out, "P5", image.width(), image.height());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

inline Bytes encode_ppm(const RgbImage& image) {
  Bytes out;
  out.reserve(image.size() * 3 + 32);
  detail::append_header(out, "P6", image.width(), image.height());
  for (const Rgb& px : image.pixels()) {
    out.push_back(px.r);
    out.push_back(px.g);
    out.push_back(px.b);
  }
  return out;
}

inline Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return data;
}

inline void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  if (path.empty()) throw IoError("empty output path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

inline RgbImage load_image(const std::filesystem::path& path) {
  const Bytes data = read_file(path);
  try {
    return decode_image(data);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

inline void save_gray(const GrayImage& image, const std::filesystem::path& path) {
  write_file(path, encode_pgm(image));
}

inline void save_binary(const BinaryImage& image, const std::filesystem::path& path) {
  save_gray(image.gray(), path);
}

inline void save_rgb(const RgbImage& image, const std::filesystem::path& path) {
  write_file(path, encode_ppm(image));
}

}  // namespace lpd
