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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpd/error.hpp"

namespace lpd {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

struct ImageSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

/// Axis-aligned rectangle in pixel coordinates; top-left origin, y down.
struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  constexpr std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
  constexpr int right() const { return x + w; }    // exclusive
  constexpr int bottom() const { return y + h; }   // exclusive

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

inline std::string to_string(const Rect& r) {
  return std::to_string(r.x) + "," + std::to_string(r.y) + "," + std::to_string(r.w) + "," +
         std::to_string(r.h);
}

inline std::int64_t intersection_area(const Rect& a, const Rect& b) {
  const int x0 = std::max(a.x, b.x);
  const int y0 = std::max(a.y, b.y);
  const int x1 = std::min(a.right(), b.right());
  const int y1 = std::min(a.bottom(), b.bottom());
  if (x1 <= x0 || y1 <= y0) return 0;
  return static_cast<std::int64_t>(x1 - x0) * (y1 - y0);
}

/// Intersection over union. Two empty rectangles have IoU 0.
inline double iou(const Rect& a, const Rect& b) {
  const std::int64_t inter = intersection_area(a, b);
  const std::int64_t uni = a.area() + b.area() - inter;
  return uni <= 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

/// Row-major raster of `Pixel`, at least 1x1.
template <typename Pixel>
class Image {
 public:
  using pixel_type = Pixel;

  Image(int width, int height, Pixel fill = Pixel{})
      : width_(checked(width, height, "image")),
        height_(height),
        pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

  Image(int width, int height, std::vector<Pixel> pixels)
      : width_(checked(width, height, "image")), height_(height), pixels_(std::move(pixels)) {
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw SizeError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                      std::to_string(width) + "x" + std::to_string(height));
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  Pixel& operator()(int x, int y) noexcept { return pixels_[index(x, y)]; }
  const Pixel& operator()(int x, int y) const noexcept { return pixels_[index(x, y)]; }

  std::span<Pixel> pixels() noexcept { return pixels_; }
  std::span<const Pixel> pixels() const noexcept { return pixels_; }

  std::span<const Pixel> row(int y) const noexcept {
    return std::span<const Pixel>(pixels_).subspan(static_cast<std::size_t>(y) * width_, width_);
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  static int checked(int width, int height, const char* what) {
    if (width < 1 || height < 1) {
      throw SizeError(std::string(what) + " dimensions must be at least 1x1, got " +
                      std::to_string(width) + "x" + std::to_string(height));
    }
    return width;
  }

  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<Pixel> pixels_;
};

using RgbImage = Image<Rgb>;
using GrayImage = Image<std::uint8_t>;
using LabelImage = Image<std::uint32_t>;

inline constexpr std::uint8_t kForeground = 255;
inline constexpr std::uint8_t kBackground = 0;

/// Two-level mask whose pixels are exactly 0 or 255.
class BinaryImage {
 public:
  BinaryImage(int width, int height) : image_(width, height, kBackground) {}

  // Rejects any pixel outside {0, 255}.
  explicit BinaryImage(GrayImage image) : image_(std::move(image)) {
    const auto px = image_.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
      if (px[i] != kBackground && px[i] != kForeground) {
        throw FormatError("binary image pixel " + std::to_string(i) + " has value " +
                          std::to_string(px[i]) + ", expected 0 or 255");
      }
    }
  }

  int width() const noexcept { return image_.width(); }
  int height() const noexcept { return image_.height(); }
  bool contains(int x, int y) const noexcept { return image_.contains(x, y); }

  bool foreground(int x, int y) const noexcept { return image_(x, y) == kForeground; }
  std::uint8_t operator()(int x, int y) const noexcept { return image_(x, y); }
  void set(int x, int y, bool on) noexcept { image_(x, y) = on ? kForeground : kBackground; }

  std::size_t count_foreground() const noexcept {
    return static_cast<std::size_t>(
        std::count(image_.pixels().begin(), image_.pixels().end(), kForeground));
  }

  const GrayImage& gray() const noexcept { return image_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  GrayImage image_;
};

/// Copies `rect` out of `image`. Throws BoundsError naming the first corner
/// that lies outside the image.
template <typename Pixel>
Image<Pixel> crop(const Image<Pixel>& image, const Rect& rect) {
  if (rect.w < 1 || rect.h < 1) {
    throw BoundsError("crop rectangle must be at least 1x1, got " + std::to_string(rect.w) + "x" +
                          std::to_string(rect.h),
                      rect.x, rect.y);
  }
  if (!image.contains(rect.x, rect.y)) {
    throw BoundsError("crop origin outside image", rect.x, rect.y);
  }
  if (rect.right() > image.width() || rect.bottom() > image.height()) {
    throw BoundsError("crop extent outside image", rect.right() - 1, rect.bottom() - 1);
  }
  std::vector<Pixel> out;
  out.reserve(static_cast<std::size_t>(rect.area()));
  for (int y = rect.y; y < rect.bottom(); ++y) {
    const auto src = image.row(y).subspan(static_cast<std::size_t>(rect.x), rect.w);
    out.insert(out.end(), src.begin(), src.end());
  }
  return Image<Pixel>(rect.w, rect.h, std::move(out));
}

inline BinaryImage crop(const BinaryImage& image, const Rect& rect) {
  return BinaryImage(crop(image.gray(), rect));
}

inline RgbImage gray_to_rgb(const GrayImage& gray) {
  std::vector<Rgb> out;
  out.reserve(gray.size());
  for (const std::uint8_t v : gray.pixels()) out.push_back({v, v, v});
  return RgbImage(gray.width(), gray.height(), std::move(out));
}

}  // namespace lpd
