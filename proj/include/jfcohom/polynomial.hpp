#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "jfcohom/group.hpp"
#include "jfcohom/numeric.hpp"
#include "jfcohom/rational.hpp"

namespace jfc {

// Dense polynomial over a coefficient field; ascending coefficient order,
// trailing zeros trimmed (the zero polynomial has empty storage).
template <typename F>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static BasicPolynomial constant(F v) { return BasicPolynomial(std::vector<F>{std::move(v)}); }
  static BasicPolynomial monomial(int degree, F v) {
    std::vector<F> c(degree + 1, F(0));
    c[degree] = std::move(v);
    return BasicPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : F(0); }

  template <typename X>
  X eval(X x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  BasicPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
    return BasicPolynomial(std::move(d));
  }

  BasicPolynomial operator-() const {
    auto c = c_;
    for (auto& v : c) v = -v;
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator+(const BasicPolynomial& p, const BasicPolynomial& q) {
    std::vector<F> c(std::max(p.c_.size(), q.c_.size()), F(0));
    for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator-(const BasicPolynomial& p, const BasicPolynomial& q) {
    return p + (-q);
  }
  friend BasicPolynomial operator*(const BasicPolynomial& p, const BasicPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<F> c(p.c_.size() + q.c_.size() - 1, F(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator*(const BasicPolynomial& p, const F& s) {
    auto c = p.c_;
    for (auto& v : c) v = v * s;
    return BasicPolynomial(std::move(c));
  }
  friend bool operator==(const BasicPolynomial& p, const BasicPolynomial& q) {
    return p.c_ == q.c_;
  }

  BasicPolynomial pow(int n) const {
    BasicPolynomial acc = constant(F(1));
    for (int i = 0; i < n; ++i) acc = acc * (*this);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }
  std::vector<F> c_;
};

using RationalPolynomial = BasicPolynomial<GaussianRational>;
using Polynomial = BasicPolynomial<Complex>;

inline Polynomial to_complex_poly(const RationalPolynomial& p) {
  std::vector<Complex> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].to_complex();
  return Polynomial(std::move(c));
}

inline Polynomial conj_coeffs(const Polynomial& p) {
  std::vector<Complex> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = std::conj(p.coeffs()[i]);
  return Polynomial(std::move(c));
}

// (c tau + d)^k * p((a tau + b)/(c tau + d)), expanded.  This is the slash
// action of weight -k on P_k, and it never raises the degree past k.
template <typename F>
BasicPolynomial<F> mobius_substitute(const BasicPolynomial<F>& p, const GroupElement& g, int k) {
  if (k < 0) throw std::invalid_argument("mobius_substitute: k must be >= 0");
  if (p.degree() > k) throw std::invalid_argument("mobius_substitute: deg p exceeds k");
  using P = BasicPolynomial<F>;
  P num(std::vector<F>{F(g.b), F(g.a)});   // a tau + b
  P den(std::vector<F>{F(g.d), F(g.c)});   // c tau + d
  P result;
  P num_pow = P::constant(F(1));
  std::vector<P> den_pows(k + 1);
  den_pows[0] = P::constant(F(1));
  for (int i = 1; i <= k; ++i) den_pows[i] = den_pows[i - 1] * den;
  for (int i = 0; i <= p.degree(); ++i) {
    if (!(p.coeff(i) == F(0)))
      result = result + num_pow * den_pows[k - i] * p.coeff(i);
    num_pow = num_pow * num;
  }
  return result;
}

}  // namespace jfc
