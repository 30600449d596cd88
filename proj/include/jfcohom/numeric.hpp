#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace jfc {

using Complex = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline const Complex TWO_PI_I{0.0, 2.0 * PI};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal branch z^w, argument in (-pi, pi].  This is the branch used for
// every automorphy factor (c*tau+d)^w in the library; half-integer weights
// rely on the consistency cocycle to absorb branch jumps.
inline Complex principal_pow(Complex z, double w) {
  if (z == Complex(0.0, 0.0)) throw std::domain_error("principal_pow: zero base");
  return std::exp(w * std::log(z));
}

// Fast exact power for integer exponents (avoids log/exp branch noise where
// the weight is an integer, which is every vector-valued weight here).
inline Complex integer_pow(Complex z, long n) {
  if (n < 0) return 1.0 / integer_pow(z, -n);
  Complex acc(1.0, 0.0), base = z;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// Dispatches to the exact integer power when w is integral.
inline Complex weight_pow(Complex z, double w) {
  double r = std::round(w);
  if (std::abs(w - r) < 1e-12) return integer_pow(z, static_cast<long>(r));
  return principal_pow(z, w);
}

// Neumaier compensated accumulator; coset sums cancel heavily and the Fourier
// inversion amplifies coefficient noise by exp(2*pi*n*y), so plain summation
// is not good enough at height 2.
class CompensatedSum {
 public:
  void add(Complex term) {
    add_part(re_, cre_, term.real());
    add_part(im_, cim_, term.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

inline double frac_mod1(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;
  return f;
}

}  // namespace jfc
