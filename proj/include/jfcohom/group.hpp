#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jfcohom/numeric.hpp"
#include "jfcohom/rational.hpp"

namespace jfc {

// Element of SL(2,Z).
struct GroupElement {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  constexpr GroupElement() = default;
  constexpr GroupElement(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
      : a(a_), b(b_), c(c_), d(d_) {}

  std::int64_t det() const { return a * d - b * c; }
  void check() const {
    if (det() != 1) throw std::invalid_argument("GroupElement: determinant must be 1");
  }

  GroupElement inverse() const { return {d, -b, -c, a}; }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  Complex act(Complex tau) const {
    return (double(a) * tau + double(b)) / (double(c) * tau + double(d));
  }
  Complex j_factor(Complex tau) const { return double(c) * tau + double(d); }

  std::uint64_t hash_key() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : {a, b, c, d}) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline constexpr GroupElement kIdentity{1, 0, 0, 1};
inline constexpr GroupElement kS{0, -1, 1, 0};
inline constexpr GroupElement kT{1, 1, 0, 1};
inline constexpr GroupElement kMinusI{-1, 0, 0, -1};

inline GroupElement T_power(std::int64_t n) { return {1, n, 0, 1}; }

// Element (gamma, (lambda, mu)) of the Jacobi group SL(2,Z) x| Z^2.
struct JacobiElement {
  GroupElement gamma;
  std::int64_t lambda = 0, mu = 0;

  JacobiElement() = default;
  JacobiElement(GroupElement g, std::int64_t l = 0, std::int64_t m = 0)
      : gamma(g), lambda(l), mu(m) {}

  friend bool operator==(const JacobiElement& x, const JacobiElement& y) {
    return x.gamma == y.gamma && x.lambda == y.lambda && x.mu == y.mu;
  }
};

// (g1,X1)(g2,X2) = (g1 g2, X1*g2 + X2) with X*g a row vector times matrix.
inline JacobiElement jacobi_compose(const JacobiElement& g1, const JacobiElement& g2) {
  const GroupElement& m = g2.gamma;
  std::int64_t lt = g1.lambda * m.a + g1.mu * m.c;
  std::int64_t mt = g1.lambda * m.b + g1.mu * m.d;
  return {g1.gamma * g2.gamma, lt + g2.lambda, mt + g2.mu};
}

inline JacobiElement jacobi_inverse(const JacobiElement& g) {
  JacobiElement inv{g.gamma.inverse()};
  const GroupElement& m = inv.gamma;
  inv.lambda = -(g.lambda * m.a + g.mu * m.c);
  inv.mu = -(g.lambda * m.b + g.mu * m.d);
  return inv;
}

// Action on H x C: (gamma tau, (z + lambda tau + mu)/(c tau + d)).
inline std::pair<Complex, Complex> jacobi_act(const JacobiElement& g, Complex tau, Complex z) {
  Complex den = g.gamma.j_factor(tau);
  return {g.gamma.act(tau), (z + double(g.lambda) * tau + double(g.mu)) / den};
}

// Word in the generators; T runs are stored with exponents so that matrices
// with large entries stay O(log) in length.
struct WordToken {
  enum Gen : std::uint8_t { S, T } gen;
  std::int64_t exp;
};

struct Word {
  std::vector<WordToken> tokens;

  GroupElement product() const {
    GroupElement m = kIdentity;
    for (const auto& t : tokens) {
      if (t.gen == WordToken::T) {
        m = m * T_power(t.exp);
      } else {
        std::int64_t e = ((t.exp % 4) + 4) % 4;
        for (std::int64_t i = 0; i < e; ++i) m = m * kS;
      }
    }
    return m;
  }
};

// Continued-fraction decomposition in S and T.  Exact integer arithmetic;
// product of the returned word equals gamma.
Word word_decompose(GroupElement gamma);

// Cusp data for the single cusp class of SL(2,Z).
struct CuspData {
  Rational width = 1;               // lambda_0
  GroupElement generator = kT;      // Q = [[1,lambda_0],[0,1]]
};

// One representative per double coset <Q>\Gamma/<Q> with 0 < c <= C, plus the
// identity coset: lower rows (c, d) with gcd(c,d)=1 and 0 <= d < c, ordered by
// (c, d).  Poincare-type sums recover the full left-coset space by unfolding
// the d ladder d0 + j*c.
std::vector<GroupElement> coset_reps(std::int64_t C);

// Canonical matrix with lower row (c, d); requires gcd(c,d)=1.
GroupElement matrix_from_row(std::int64_t c, std::int64_t d);

// gamma0 with gamma0*tau in the standard fundamental domain (|Re| <= 1/2,
// |tau| >= 1, up to boundary tolerance).
GroupElement reduce_to_fundamental(Complex tau, Complex* out = nullptr);

}  // namespace jfc
