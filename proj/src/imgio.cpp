// Copyright 2026 The Unprop Authors
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

#include "unprop/imgio.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "unprop/errors.hpp"

namespace unprop {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

// Netpbm header token reader: whitespace and '#' comments separate tokens.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  int next_int() {
    skip_space_and_comments();
    std::size_t start = pos_;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) throw MalformedImage("bad netpbm header field");
    return std::stoi(std::string(bytes_.substr(start, pos_ - start)));
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw MalformedImage("netpbm header not terminated");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 2;
};

bool is_png(std::string_view bytes) {
  return bytes.size() >= 8 && png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0, 8) == 0;
}

Image decode_png(std::string_view bytes) {
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    throw MalformedImage(std::string("png: ") + png.message);
  }
  const auto fail = [&](auto error) {
    png_image_free(&png);
    throw error;
  };
  if (png.format & PNG_FORMAT_FLAG_COLORMAP) fail(UnsupportedFormat("png: palette images are not supported"));
  if (png.format & PNG_FORMAT_FLAG_ALPHA) fail(UnsupportedFormat("png: alpha channels are not supported"));
  if (png.format & PNG_FORMAT_FLAG_LINEAR) fail(UnsupportedFormat("png: 16-bit samples are not supported"));
  if (png.width > 1u << 24 || png.height > 1u << 24) fail(UnsupportedFormat("png: image too large"));

  const int channels = (png.format & PNG_FORMAT_FLAG_COLOR) ? 3 : 1;
  png.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  Image img(static_cast<int>(png.width), static_cast<int>(png.height), channels);
  if (!png_image_finish_read(&png, nullptr, img.data().data(), static_cast<png_int_32>(img.row_stride()),
                             nullptr)) {
    const std::string message = png.message;
    png_image_free(&png);
    throw MalformedImage("png: " + message);
  }
  return img;
}

std::string encode_png(const Image& img) {
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width());
  png.height = static_cast<png_uint_32>(img.height());
  png.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  png_alloc_size_t size = 0;
  const auto stride = static_cast<png_int_32>(img.row_stride());
  if (!png_image_write_to_memory(&png, nullptr, &size, 0, img.data().data(), stride, nullptr)) {
    throw IoError(std::string("png: ") + png.message);
  }
  std::string out(size, '\0');
  if (!png_image_write_to_memory(&png, out.data(), &size, 0, img.data().data(), stride, nullptr)) {
    throw IoError(std::string("png: ") + png.message);
  }
  out.resize(size);
  return out;
}

}  // namespace

Image decode_netpbm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw UnsupportedFormat("not a binary PGM/PPM file");
  }
  const int channels = bytes[1] == '6' ? 3 : 1;
  HeaderReader header(bytes);
  const int width = header.next_int();
  const int height = header.next_int();
  const int maxval = header.next_int();
  if (width < 1 || height < 1) throw MalformedImage("netpbm dimensions must be positive");
  if (maxval != 255) throw UnsupportedFormat("netpbm maxval must be 255, got " + std::to_string(maxval));
  const std::size_t offset = header.raster_offset();

  const std::size_t expected = static_cast<std::size_t>(width) * height * channels;
  if (bytes.size() - std::min(offset, bytes.size()) < expected) {
    throw MalformedImage("netpbm raster is truncated (short read)");
  }
  std::vector<std::uint8_t> data(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                                 bytes.begin() + static_cast<std::ptrdiff_t>(offset + expected));
  return Image(width, height, channels, std::move(data));
}

std::string encode_netpbm(const Image& img) {
  std::string out = (img.channels() == 3 ? "P6\n" : "P5\n") + std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n";
  const auto data = img.data();
  out.append(reinterpret_cast<const char*>(data.data()), data.size());
  return out;
}

Image load_image(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (is_png(bytes)) return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P') return decode_netpbm(bytes);
  throw UnsupportedFormat(path.string() + ": unrecognized image format");
}

void save_image(const Image& img, const std::filesystem::path& path, ImageFileFormat fmt) {
  write_file(path, fmt == ImageFileFormat::kPng ? encode_png(img) : encode_netpbm(img));
}

std::optional<ImageFileFormat> format_from_extension(std::string_view ext) {
  if (!ext.empty() && ext.front() == '.') ext.remove_prefix(1);
  std::string lower(ext);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "png") return ImageFileFormat::kPng;
  if (lower == "ppm" || lower == "pgm" || lower == "pnm") return ImageFileFormat::kPpmBinary;
  return std::nullopt;
}

std::string_view extension_for(ImageFileFormat fmt, int channels) {
  if (fmt == ImageFileFormat::kPng) return ".png";
  return channels == 3 ? ".ppm" : ".pgm";
}

}  // namespace unprop
