#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "atlas.hpp"

// Serialization of emanation tables: the delimited text format of the
// original dump, and deterministic binary pixmaps ("sand mandalas").
namespace boxkite {

using Rgb = std::array<std::uint8_t, 3>;

/// Deterministic cell colouring.  Default: hue = magnitude * 360 / 2^N,
/// saturation 0.8, value 1.0 for "+" cells and 0.6 for "-"; white background;
/// the long-diagonal X is painted like the background unless overridden.
class Palette {
 public:
  Palette() = default;

  Rgb color(std::uint32_t dimension_exponent, std::uint32_t magnitude, bool positive) const;
  Rgb background() const { return background_; }
  Rgb diagonal() const { return diagonal_; }

  /// Key=R,G,B lines: "background", "diagonal", or a decimal magnitude.
  /// '#' starts a comment.  Throws std::invalid_argument on malformed input.
  static Palette parse(const std::string& text);

 private:
  Rgb background_ = {255, 255, 255};
  Rgb diagonal_ = {255, 255, 255};
  std::map<std::uint32_t, Rgb> overrides_;
};

/// First row: empty corner then the column low indices; each following row:
/// the row low then K fields, empty or a signed decimal (edge sign times
/// emanation low index).  Rows end in '\n'.
std::string to_delimited(const EmanationTable& t);

/// Inverse of to_delimited; the context is recovered from the header (N from
/// the row length, S from the mirrored strut-opposite pair).  Throws
/// std::invalid_argument on malformed text.
EmanationTable parse_delimited(const std::string& text);

/// Binary portable pixmap (P6), width = height = K * cell_px.
std::vector<std::uint8_t> to_pixmap(const EmanationTable& t, const Palette& p,
                                    std::uint32_t cell_px);

/// "N" + 3-digit N + "S" + 3-digit S + "." + extension.
std::string default_filename(const StrutContext& ctx, const std::string& extension);

}  // namespace boxkite
