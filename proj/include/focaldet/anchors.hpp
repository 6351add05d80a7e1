#pragma once

#include <cstddef>
#include <vector>

#include "focaldet/box.hpp"

namespace focaldet {

struct AnchorLevel {
  double stride = 0;
  std::vector<double> scales;
  std::vector<double> ratios;  // height / width
};

/// Dense multi-level anchor lattice over an image. Strides must be
/// strictly increasing across levels.
struct AnchorGrid {
  std::vector<AnchorLevel> levels;
  double image_width = 0;
  double image_height = 0;

  /// 5 levels, strides 8..128, scales {2^0, 2^(1/3), 2^(2/3)},
  /// ratios {0.5, 1, 2}.
  static AnchorGrid standard(double image_width, double image_height);

  /// Throws std::invalid_argument on empty scales/ratios, non-increasing
  /// strides, or non-positive dimensions.
  void validate() const;

  std::size_t cells(std::size_t level) const;
  std::size_t anchor_count() const;
};

/// Deterministic ordering: level-major, then row, column, scale, ratio.
/// Each anchor is centered on its grid cell center; side = stride*scale,
/// aspect ratio applied preserving area.
std::vector<BBox> generate_anchors(const AnchorGrid& grid);

}  // namespace focaldet
