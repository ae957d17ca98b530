#pragma once

#include <stdexcept>
#include <vector>

#include "sdym/util.hpp"

namespace sdym {

/// Cubic verification lattice in R^4. Defaults resolve degree <= 6
/// polynomial fields while keeping full sweeps under a second.
struct GridSpec {
  R4Point center{};
  double extent = 0.4;
  int points = 9;  // per axis, >= 3 for stencils

  double h() const { return points > 1 ? 2.0 * extent / (points - 1) : 0.0; }

  std::vector<R4Point> lattice() const {
    if (points < 1) throw std::invalid_argument("GridSpec: points must be >= 1");
    std::vector<R4Point> pts;
    pts.reserve(std::size_t(points) * points * points * points);
    const double step = h();
    auto axis = [&](int k, double c) { return c - extent + step * k; };
    for (int it = 0; it < points; ++it)
      for (int ix = 0; ix < points; ++ix)
        for (int iy = 0; iy < points; ++iy)
          for (int iz = 0; iz < points; ++iz)
            pts.push_back({axis(it, center.t), axis(ix, center.x),
                           axis(iy, center.y), axis(iz, center.z)});
    return pts;
  }
};

}  // namespace sdym
