#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cvt/pattern.hpp"

namespace cvt {

/// Binary pixel image; true = ink/black. Row 0 is the top row.
class Bitmap {
 public:
  Bitmap(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int row, int col) const;
  void set(int row, int col, bool value);

  std::size_t ink_count() const;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::size_t index(int row, int col) const;

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

struct RasterOptions {
  std::size_t max_pixels = std::size_t{1} << 26;
};

/// Expands each grid cell into a cell_size x cell_size pixel block.
Bitmap grid_to_bitmap(const PatternGrid& pattern, int cell_size = 1,
                      const RasterOptions& opts = {});

/// Reads a bitmap back as a boolean grid (ink = true).
PatternGrid to_pattern(const Bitmap& bitmap);

/// Reverses row order. Involution; preserves ink count.
Bitmap flip_vertical(const Bitmap& b);

/// Reverses column order. Involution; preserves ink count.
Bitmap flip_horizontal(const Bitmap& b);

/// Reverses both row and column order; equals flip_vertical o flip_horizontal.
Bitmap rotate_180(const Bitmap& b);

enum class PbmFormat { P1, P4 };

/// Portable bitmap encoding. P1 is "P1\n<width> <height>\n" followed by
/// rows of space-separated 0/1, one grid row per line; P4 packs rows
/// MSB-first. Both round-trip losslessly through decode_pbm.
std::string encode_pbm(const Bitmap& b, PbmFormat format = PbmFormat::P1);
Bitmap decode_pbm(std::string_view data);

void write_pbm(const std::filesystem::path& path, const Bitmap& b,
               PbmFormat format = PbmFormat::P1);
Bitmap read_pbm(const std::filesystem::path& path);

}  // namespace cvt
