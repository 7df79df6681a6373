#pragma once

#include <cmath>
#include <vector>

#include "hoctop/delaunay.hpp"

namespace hoctop::fixtures {

inline Cloud square() { return Cloud::from_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}}); }

inline Cloud equilateral() { return Cloud::from_points({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}}); }

// Ten points whose offsets open one hole at 1.5, a second at 2.0, and close
// both at the circumradius 5 sqrt(17) / 8 of two mirrored acute triangles.
inline Cloud figure_eight() {
  return Cloud::from_points({{0, 0},
                             {4, 0},
                             {1, 4},
                             {3, -4},
                             {-0.61, 2.56},
                             {4.84, 2.88},
                             {3.24, 4.23},
                             {4.61, -2.56},
                             {-0.84, -2.88},
                             {0.76, -4.23}});
}

inline const double kFigureEightDeath = 5.0 * std::sqrt(17.0) / 8.0;

}  // namespace hoctop::fixtures
