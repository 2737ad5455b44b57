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

#include <stdexcept>
#include <string>

namespace lpd {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Unsupported or corrupt image encoding.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A rectangle or coordinate fell outside an image.
class BoundsError : public Error {
 public:
  BoundsError(const std::string& what, int x, int y)
      : Error(what + " (at x=" + std::to_string(x) + ", y=" + std::to_string(y) + ")"),
        x_(x),
        y_(y) {}

  int x() const noexcept { return x_; }
  int y() const noexcept { return y_; }

 private:
  int x_;
  int y_;
};

// Image dimensions unsuitable for an operation (e.g. smaller than a 3x3 window).
class SizeError : public Error {
 public:
  using Error::Error;
};

class EmptyImageError : public Error {
 public:
  using Error::Error;
};

class NoCandidatesError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration. `line` is 0 when the value did not come from a file.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, std::string key = {}, int line = 0)
      : Error(decorate(message, key, line)), message_(message), key_(std::move(key)), line_(line) {}

  // The reason alone, without the line/key prefix.
  const std::string& message() const noexcept { return message_; }
  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  static std::string decorate(const std::string& what, const std::string& key, int line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "'" + key + "': ";
    return out + what;
  }

  std::string message_;
  std::string key_;
  int line_;
};

}  // namespace lpd
