// Copyright 2026 The archgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Gray and binary rasters with Netpbm PGM (P2 / P5) serialization.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archgeom/errors.hpp"

namespace archgeom {

struct GrayImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint16_t> pixels;  // row-major

  GrayImage() = default;
  GrayImage(int w, int h, int maxv, std::vector<std::uint16_t> px)
      : width(w), height(h), maxval(maxv), pixels(std::move(px)) {
    if (w <= 0 || h <= 0) throw DomainError("image dimensions must be positive");
    if (maxv < 1 || maxv > 65535) throw DomainError("maxval must be in [1, 65535]");
    if (pixels.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
      throw DomainError("pixel count does not match dimensions");
    }
  }

  std::uint16_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Row-major bit raster; true = ink.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int w, int h) : width_(w), height_(h) {
    if (w <= 0 || h <= 0) throw DomainError("image dimensions must be positive");
    bits_.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set(int x, int y, bool ink = true) { bits_[index(x, y)] = ink ? 1 : 0; }

  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  std::size_t ink_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Inclusive pixel bounds.
struct BoundingBox {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

inline std::optional<BoundingBox> ink_bounding_box(const BinaryImage& img) {
  std::optional<BoundingBox> box;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      if (!box) {
        box = BoundingBox{x, y, x, y};
      } else {
        box->x0 = std::min(box->x0, x);
        box->x1 = std::max(box->x1, x);
        box->y1 = y;
      }
    }
  }
  return box;
}

/// Default ink threshold for a given maxval: ceil((maxval + 1) / 2).
inline int default_threshold(int maxval) { return (maxval + 2) / 2; }

/// bit = pixel < threshold (dark strokes on a light ground).
inline BinaryImage binarize(const GrayImage& img, int threshold) {
  if (threshold < 0 || threshold > img.maxval) {
    throw DomainError("threshold must lie in [0, maxval]");
  }
  BinaryImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) out.set(x, y, img.at(x, y) < threshold);
  }
  return out;
}

/// Ink rendered as 0, background as maxval.
inline GrayImage to_gray(const BinaryImage& img, int maxval = 255) {
  std::vector<std::uint16_t> px(static_cast<std::size_t>(img.width()) * img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      px[static_cast<std::size_t>(y) * img.width() + x] =
          img.at(x, y) ? 0 : static_cast<std::uint16_t>(maxval);
    }
  }
  return GrayImage(img.width(), img.height(), maxval, std::move(px));
}

// ---------------------------------------------------------------------------
// PGM

class PgmError : public InputError {
 public:
  enum class Kind { UnsupportedMagic, MalformedHeader, TruncatedData, PixelOutOfRange, MalformedData };

  PgmError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

class PgmReader {
 public:
  explicit PgmReader(std::span<const std::byte> data) : data_(data) {}

  bool eof() const { return pos_ >= data_.size(); }
  char peek() const { return static_cast<char>(data_[pos_]); }
  char get() { return static_cast<char>(data_[pos_++]); }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n' && peek() != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  /// Unsigned decimal; nullopt when no digit is present.
  std::optional<long long> number() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (1LL << 40)) return std::nullopt;
    }
    return v;
  }

 private:
  std::span<const std::byte> data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GrayImage read_pgm(std::span<const std::byte> data) {
  using K = PgmError::Kind;
  detail::PgmReader in(data);
  if (in.remaining() < 2) throw PgmError(K::MalformedHeader, "pgm: missing magic number");
  const char m0 = in.get();
  const char m1 = in.get();
  if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
    throw PgmError(K::UnsupportedMagic, std::string("pgm: unsupported magic \"") + m0 + m1 + "\"");
  }
  const bool binary = m1 == '5';

  auto header_field = [&](const char* name) {
    if (!in.eof() && !std::isspace(static_cast<unsigned char>(in.peek())) && in.peek() != '#') {
      throw PgmError(K::MalformedHeader, std::string("pgm: expected whitespace before ") + name);
    }
    in.skip_space_and_comments();
    const auto v = in.number();
    if (!v) {
      if (in.eof()) throw PgmError(K::MalformedHeader, std::string("pgm: missing ") + name);
      throw PgmError(K::MalformedHeader, std::string("pgm: invalid ") + name);
    }
    return *v;
  };
  const long long w = header_field("width");
  const long long h = header_field("height");
  const long long maxval = header_field("maxval");
  if (w <= 0 || h <= 0 || w > (1 << 20) || h > (1 << 20)) {
    throw PgmError(K::MalformedHeader, "pgm: invalid dimensions");
  }
  if (maxval < 1 || maxval > 65535) throw PgmError(K::MalformedHeader, "pgm: maxval out of range");

  const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  std::vector<std::uint16_t> px(count);
  if (binary) {
    if (in.eof() || !std::isspace(static_cast<unsigned char>(in.peek()))) {
      throw PgmError(in.eof() ? K::TruncatedData : K::MalformedHeader,
                     "pgm: expected single whitespace after maxval");
    }
    in.get();
    const std::size_t bpp = maxval > 255 ? 2 : 1;
    if (in.remaining() < count * bpp) throw PgmError(K::TruncatedData, "pgm: truncated raster");
    for (std::size_t i = 0; i < count; ++i) {
      unsigned v = static_cast<unsigned char>(in.get());
      if (bpp == 2) v = (v << 8) | static_cast<unsigned char>(in.get());
      if (v > maxval) throw PgmError(K::PixelOutOfRange, "pgm: pixel exceeds maxval");
      px[i] = static_cast<std::uint16_t>(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      in.skip_space();
      if (in.eof()) throw PgmError(K::TruncatedData, "pgm: truncated raster");
      const auto v = in.number();
      if (!v) throw PgmError(K::MalformedData, "pgm: invalid pixel value");
      if (*v > maxval) throw PgmError(K::PixelOutOfRange, "pgm: pixel exceeds maxval");
      px[i] = static_cast<std::uint16_t>(*v);
    }
  }
  return GrayImage(static_cast<int>(w), static_cast<int>(h), static_cast<int>(maxval), std::move(px));
}

inline GrayImage read_pgm(std::string_view text) {
  return read_pgm(std::as_bytes(std::span(text.data(), text.size())));
}

/// Serializes as plain (P2, rows wrapped at 70 columns) or raw (P5) PGM.
inline std::string write_pgm(const GrayImage& img, bool ascii) {
  std::string out;
  out += ascii ? "P2\n" : "P5\n";
  out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
  out += std::to_string(img.maxval) + "\n";
  if (ascii) {
    for (int y = 0; y < img.height; ++y) {
      std::size_t line = 0;
      for (int x = 0; x < img.width; ++x) {
        const std::string v = std::to_string(img.at(x, y));
        if (line > 0 && line + 1 + v.size() > 70) {
          out += '\n';
          line = 0;
        } else if (line > 0) {
          out += ' ';
          ++line;
        }
        out += v;
        line += v.size();
      }
      out += '\n';
    }
  } else {
    const bool wide = img.maxval > 255;
    out.reserve(out.size() + img.pixels.size() * (wide ? 2 : 1));
    for (const auto v : img.pixels) {
      if (wide) out += static_cast<char>(v >> 8);
      out += static_cast<char>(v & 0xff);
    }
  }
  return out;
}

}  // namespace archgeom
