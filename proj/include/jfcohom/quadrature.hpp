#pragma once

#include <functional>
#include <vector>

#include "jfcohom/numeric.hpp"

namespace jfc {

using PathEvaluator = std::function<Complex(Complex)>;

// How a path endpoint meets a cusp.  The quadrature truncates the approach at
// the point where the integrand magnitude drops below tol/10; Finite walks
// geometrically toward the cusp point, Infinity walks upward.
enum class CuspKind { None, Finite, Infinity };

struct PathEnd {
  Complex point;                     // for Infinity: x + iy, y = starting height
  CuspKind cusp = CuspKind::None;
};

// Piecewise-linear contour in the upper half plane.  Interior waypoints are
// ordinary; the two ends may be cusps.
struct Path {
  PathEnd start;
  std::vector<Complex> waypoints;    // interior corners, in order
  PathEnd end;

  static Path segment(Complex from, Complex to) { return {{from}, {}, {to}}; }
};

struct QuadratureResult {
  Complex value{0, 0};
  double error_estimate = 0;
  bool converged = true;
  int panels = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) along the path; declared error <= tol on
// convergence, otherwise the partial estimate is returned with converged
// false.
QuadratureResult contour_integrate(const PathEvaluator& f, const Path& path, double tol);

}  // namespace jfc
