#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "jfcohom/numeric.hpp"

namespace jfc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rational(num, den);
}

inline std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Reduce into [0,1).
inline Rational frac_part(Rational q) {
  Integer n = numerator(q), d = denominator(q);
  Integer m = n % d;
  if (m < 0) m += d;
  return Rational(m, d);
}

// Nearest rational with denominator <= max_den (Stern-Brocot walk).  Used to
// snap kappa offsets recovered from unit-circle phases back onto the exact
// rational lattice they live on.
inline Rational snap_rational(double x, std::int64_t max_den = 4096,
                              double tol = 1e-9) {
  double fl = std::floor(x);
  double f = x - fl;
  std::int64_t a = 0, b = 1, c = 1, d = 1;  // f in [a/b, c/d]
  while (b + d <= max_den) {
    std::int64_t mn = a + c, md = b + d;
    double mid = double(mn) / double(md);
    if (std::abs(mid - f) < tol) {
      Rational r(mn, md);
      return r + Rational(static_cast<std::int64_t>(fl));
    }
    if (f > mid) {
      a = mn;
      b = md;
    } else {
      c = mn;
      d = md;
    }
  }
  // Closest endpoint wins.
  double ea = std::abs(double(a) / double(b) - f);
  double ec = std::abs(double(c) / double(d) - f);
  Rational r = ea <= ec ? Rational(a, b) : Rational(c, d);
  if (std::abs(to_double(r) - f) > tol)
    throw std::domain_error("snap_rational: no rational within tolerance");
  return r + Rational(static_cast<std::int64_t>(fl));
}

// Exact element of Q(i).  Confined to the places where the paper's identities
// are algebraic (Bol, P_k closure); everything evaluative runs in doubles.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << rational_str(g.re) << (g.im >= 0 ? "+" : "") << rational_str(g.im) << "i";
  }
};

}  // namespace jfc
