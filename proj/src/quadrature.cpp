#include "jfcohom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace jfc {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
const double kNodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
    0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813};
const double kGauss[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
    0, 0, 0, 0};
const double kKronrod[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525, 0.063092092629979,
    0.204432940075298, 0.169004726639267, 0.104790010322250, 0.022935322010529};

struct PanelEstimate {
  Complex k15;
  double err;
};

// One straight panel from za to zb.
PanelEstimate g7k15(const PathEvaluator& f, Complex za, Complex zb) {
  Complex mid = 0.5 * (za + zb);
  Complex half = 0.5 * (zb - za);
  Complex y0 = f(mid);
  Complex g = kGauss[0] * y0, k = kKronrod[0] * y0;
  for (int i = 1; i < 8; ++i) {
    Complex dz = half * kNodes[i];
    Complex yi = f(mid + dz) + f(mid - dz);
    g += kGauss[i] * yi;
    k += kKronrod[i] * yi;
  }
  g *= half;
  k *= half;
  double diff = std::abs(g - k);
  // Standard QUADPACK-style sharpening of the raw G-K difference.
  double err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(k), 1e-300), 1.5));
  if (err == 0) err = diff;
  return {k, err};
}


// Replace a cusp end by a regular point close enough that the rest of the
// approach contributes less than tol/10, assuming exponential decay of f
// toward the cusp (cusp forms do decay like that).
Complex truncate_cusp(const PathEvaluator& f, const Path& path, bool at_start, double tol) {
  const PathEnd& end = at_start ? path.start : path.end;
  if (end.cusp == CuspKind::Infinity) {
    double x = end.point.real();
    double y = std::max(end.point.imag(), 1.0);
    for (int i = 0; i < 120; ++i) {
      Complex z(x, y);
      // Remaining vertical integral is about |f| times the decay length; one
      // unit of height is a safe overestimate of that length here.
      if (std::abs(f(z)) * std::max(1.0, y) < tol / 10) return z;
      y *= 1.25;
    }
    return Complex(x, y);
  }
  // Finite cusp: walk geometrically from the interior toward the cusp point.
  Complex interior = at_start
      ? (path.waypoints.empty() ? path.end.point : path.waypoints.front())
      : (path.waypoints.empty() ? path.start.point : path.waypoints.back());
  Complex q = end.point;
  Complex z = q + 0.5 * (interior - q);
  for (int i = 0; i < 120; ++i) {
    if (std::abs(f(z)) * std::abs(z - q) < tol / 10) return z;
    z = q + 0.5 * (z - q);
  }
  return z;
}

}  // namespace

QuadratureResult contour_integrate(const PathEvaluator& f, const Path& path, double tol) {
  if (tol <= 0) throw std::invalid_argument("contour_integrate: tol must be positive");

  std::vector<Complex> pts;
  Complex a = path.start.cusp == CuspKind::None ? path.start.point
                                                : truncate_cusp(f, path, true, tol);
  pts.push_back(a);
  for (Complex w : path.waypoints) pts.push_back(w);
  Complex b = path.end.cusp == CuspKind::None ? path.end.point
                                              : truncate_cusp(f, path, false, tol);
  pts.push_back(b);

  struct Interval {
    Complex za, zb;
    PanelEstimate est;
  };
  std::deque<Interval> work;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) continue;
    work.push_back({pts[i], pts[i + 1], g7k15(f, pts[i], pts[i + 1])});
  }

  QuadratureResult out;
  const int max_panels = 4000;
  int used = static_cast<int>(work.size());
  CompensatedSum settled;
  double settled_err = 0;

  while (!work.empty()) {
    // Split the worst interval while the total estimated error exceeds tol.
    double total_err = settled_err;
    for (const auto& iv : work) total_err += iv.est.err;
    if (total_err <= tol || used >= max_panels) break;

    auto worst = std::max_element(work.begin(), work.end(), [](const Interval& x, const Interval& y) {
      return x.est.err < y.est.err;
    });
    Interval iv = *worst;
    work.erase(worst);
    Complex mid = 0.5 * (iv.za + iv.zb);
    Interval left{iv.za, mid, g7k15(f, iv.za, mid)};
    Interval right{mid, iv.zb, g7k15(f, mid, iv.zb)};
    used += 2;
    for (const Interval& half : {left, right}) {
      if (half.est.err < tol * 1e-4) {
        settled.add(half.est.k15);
        settled_err += half.est.err;
      } else {
        work.push_back(half);
      }
    }
  }

  CompensatedSum value;
  value.add(settled.value());
  double err = settled_err;
  for (const auto& iv : work) {
    value.add(iv.est.k15);
    err += iv.est.err;
  }
  out.value = value.value();
  out.error_estimate = err;
  out.panels = used;
  out.converged = err <= tol;
  return out;
}

}  // namespace jfc
