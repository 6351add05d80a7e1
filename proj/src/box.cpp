#include "focaldet/box.hpp"

#include <algorithm>
#include <stdexcept>

namespace focaldet {

double iou(const BBox& a, const BBox& b) {
  const double iw =
      std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double ih =
      std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (iw <= 0 || ih <= 0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

RegressionTarget encode_box(const BBox& anchor, const BBox& gt) {
  const double aw = anchor.width(), ah = anchor.height();
  const double gw = gt.width(), gh = gt.height();
  if (aw <= 0 || ah <= 0) throw std::invalid_argument("encode_box: zero-area anchor");
  if (gw <= 0 || gh <= 0) throw std::invalid_argument("encode_box: zero-area gt");
  RegressionTarget t;
  t.dx = (gt.center_x() - anchor.center_x()) / aw;
  t.dy = (gt.center_y() - anchor.center_y()) / ah;
  t.dw = std::log(gw / aw);
  t.dh = std::log(gh / ah);
  return t;
}

namespace {
constexpr double kMaxLogScale = 6.907755278982137;  // log(1000)
}

BBox decode_box(const BBox& anchor, const RegressionTarget& t) {
  const double aw = anchor.width(), ah = anchor.height();
  if (aw <= 0 || ah <= 0) throw std::invalid_argument("decode_box: zero-area anchor");
  const double cx = anchor.center_x() + t.dx * aw;
  const double cy = anchor.center_y() + t.dy * ah;
  const double w = aw * std::exp(std::min(t.dw, kMaxLogScale));
  const double h = ah * std::exp(std::min(t.dh, kMaxLogScale));
  return BBox::from_center(cx, cy, w, h);
}

}  // namespace focaldet
