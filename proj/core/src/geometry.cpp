#include "ccoa/geometry.hpp"

namespace ccoa {

std::vector<Point> grid_points(int radius) {
  std::vector<Point> out;
  if (radius < 0) return out;
  out.reserve(static_cast<std::size_t>(2 * radius + 1) * static_cast<std::size_t>(2 * radius + 1));
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y) out.push_back({x, y});
  return out;
}

}  // namespace ccoa
