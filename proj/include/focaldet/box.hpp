#pragma once

#include <cmath>

namespace focaldet {

/// Axis-aligned box in continuous pixel coordinates, corner form.
/// Half-open rectangle semantics: area = (x_max-x_min)*(y_max-y_min),
/// no +1 pixel convention.
struct BBox {
  double x_min = 0, y_min = 0, x_max = 0, y_max = 0;

  BBox() = default;
  BBox(double x0, double y0, double x1, double y1)
      : x_min(x0), y_min(y0), x_max(x1), y_max(y1) {}

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  double center_x() const { return 0.5 * (x_min + x_max); }
  double center_y() const { return 0.5 * (y_min + y_max); }

  bool valid() const {
    return std::isfinite(x_min) && std::isfinite(y_min) &&
           std::isfinite(x_max) && std::isfinite(y_max) && x_max >= x_min &&
           y_max >= y_min;
  }

  static BBox from_center(double cx, double cy, double w, double h) {
    return BBox(cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h);
  }
};

/// Intersection over union; 0 when the union has zero area.
double iou(const BBox& a, const BBox& b);

/// Offsets of a box relative to an anchor: center shift normalized by
/// anchor size, log size ratios.
struct RegressionTarget {
  double dx = 0, dy = 0, dw = 0, dh = 0;
};

/// Throws std::invalid_argument when anchor or gt has zero area.
RegressionTarget encode_box(const BBox& anchor, const BBox& gt);

/// Inverse of encode_box. dw/dh are clamped to log(1000) so a divergent
/// regressor cannot overflow exp.
BBox decode_box(const BBox& anchor, const RegressionTarget& t);

}  // namespace focaldet
