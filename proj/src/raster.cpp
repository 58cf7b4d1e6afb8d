#include "cvt/raster.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace cvt {

Bitmap::Bitmap(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("Bitmap: dimensions must be positive");
  }
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t Bitmap::index(int row, int col) const {
  if (row < 0 || row >= height_ || col < 0 || col >= width_) {
    throw std::out_of_range("Bitmap: pixel (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside " + std::to_string(width_) +
                            "x" + std::to_string(height_) + " image");
  }
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
         static_cast<std::size_t>(col);
}

bool Bitmap::at(int row, int col) const { return pixels_[index(row, col)] != 0; }

void Bitmap::set(int row, int col, bool value) { pixels_[index(row, col)] = value ? 1 : 0; }

std::size_t Bitmap::ink_count() const {
  return std::accumulate(pixels_.begin(), pixels_.end(), std::size_t{0});
}

Bitmap grid_to_bitmap(const PatternGrid& pattern, int cell_size, const RasterOptions& opts) {
  if (cell_size < 1) throw std::invalid_argument("grid_to_bitmap: cell_size must be >= 1");
  const std::size_t out_w = pattern.cols() * static_cast<std::size_t>(cell_size);
  const std::size_t out_h = pattern.rows() * static_cast<std::size_t>(cell_size);
  if (out_w * out_h > opts.max_pixels) {
    throw std::invalid_argument("grid_to_bitmap: " + std::to_string(out_w) + "x" +
                                std::to_string(out_h) + " exceeds the pixel budget of " +
                                std::to_string(opts.max_pixels));
  }
  Bitmap b(static_cast<int>(out_w), static_cast<int>(out_h));
  for (std::size_t r = 0; r < pattern.rows(); ++r) {
    for (std::size_t c = 0; c < pattern.cols(); ++c) {
      if (!pattern.at(r, c)) continue;
      for (int dr = 0; dr < cell_size; ++dr) {
        for (int dc = 0; dc < cell_size; ++dc) {
          b.set(static_cast<int>(r) * cell_size + dr, static_cast<int>(c) * cell_size + dc,
                true);
        }
      }
    }
  }
  return b;
}

PatternGrid to_pattern(const Bitmap& bitmap) {
  PatternGrid grid(static_cast<std::size_t>(bitmap.height()),
                   static_cast<std::size_t>(bitmap.width()), "bitmap");
  for (int r = 0; r < bitmap.height(); ++r) {
    for (int c = 0; c < bitmap.width(); ++c) {
      grid.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), bitmap.at(r, c));
    }
  }
  return grid;
}

Bitmap flip_vertical(const Bitmap& b) {
  Bitmap out(b.width(), b.height());
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      out.set(b.height() - 1 - r, c, b.at(r, c));
    }
  }
  return out;
}

Bitmap flip_horizontal(const Bitmap& b) {
  Bitmap out(b.width(), b.height());
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      out.set(r, b.width() - 1 - c, b.at(r, c));
    }
  }
  return out;
}

Bitmap rotate_180(const Bitmap& b) {
  Bitmap out(b.width(), b.height());
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      out.set(b.height() - 1 - r, b.width() - 1 - c, b.at(r, c));
    }
  }
  return out;
}

std::string encode_pbm(const Bitmap& b, PbmFormat format) {
  std::string out;
  if (format == PbmFormat::P1) {
    out = "P1\n" + std::to_string(b.width()) + " " + std::to_string(b.height()) + "\n";
    for (int r = 0; r < b.height(); ++r) {
      for (int c = 0; c < b.width(); ++c) {
        if (c > 0) out += ' ';
        out += b.at(r, c) ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }
  out = "P4\n" + std::to_string(b.width()) + " " + std::to_string(b.height()) + "\n";
  const int row_bytes = (b.width() + 7) / 8;
  for (int r = 0; r < b.height(); ++r) {
    for (int byte = 0; byte < row_bytes; ++byte) {
      std::uint8_t packed = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const int c = byte * 8 + bit;
        if (c < b.width() && b.at(r, c)) packed |= static_cast<std::uint8_t>(0x80 >> bit);
      }
      out += static_cast<char>(packed);
    }
  }
  return out;
}

namespace {

// Reads the next whitespace-delimited token, skipping '#' comment lines.
std::string next_token(std::string_view data, std::size_t& pos) {
  while (pos < data.size()) {
    const char ch = data[pos];
    if (ch == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else {
      break;
    }
  }
  const std::size_t start = pos;
  while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
  if (start == pos) throw std::invalid_argument("decode_pbm: unexpected end of data");
  return std::string(data.substr(start, pos - start));
}

int parse_dimension(const std::string& token) {
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("decode_pbm: bad dimension '" + token + "'");
  }
  if (consumed != token.size() || value < 1) {
    throw std::invalid_argument("decode_pbm: bad dimension '" + token + "'");
  }
  return value;
}

}  // namespace

Bitmap decode_pbm(std::string_view data) {
  std::size_t pos = 0;
  const std::string magic = next_token(data, pos);
  if (magic != "P1" && magic != "P4") {
    throw std::invalid_argument("decode_pbm: unsupported magic '" + magic + "'");
  }
  const int width = parse_dimension(next_token(data, pos));
  const int height = parse_dimension(next_token(data, pos));
  Bitmap b(width, height);

  if (magic == "P1") {
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const std::string token = next_token(data, pos);
        if (token != "0" && token != "1") {
          throw std::invalid_argument("decode_pbm: bad pixel token '" + token + "'");
        }
        b.set(r, c, token == "1");
      }
    }
    return b;
  }

  // P4: exactly one whitespace byte separates the header from pixel data.
  if (pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[pos]))) {
    throw std::invalid_argument("decode_pbm: missing P4 header terminator");
  }
  ++pos;
  const int row_bytes = (width + 7) / 8;
  if (data.size() - pos < static_cast<std::size_t>(row_bytes) * height) {
    throw std::invalid_argument("decode_pbm: truncated P4 pixel data");
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const auto byte = static_cast<std::uint8_t>(data[pos + r * row_bytes + c / 8]);
      b.set(r, c, (byte >> (7 - c % 8)) & 1);
    }
  }
  return b;
}

void write_pbm(const std::filesystem::path& path, const Bitmap& b, PbmFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pbm: cannot open " + path.string());
  const std::string data = encode_pbm(b, format);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write_pbm: write failed for " + path.string());
}

Bitmap read_pbm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_pbm: cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_pbm(data);
}

}  // namespace cvt
