#include "jfcohom/group.hpp"

#include <cmath>
#include <cstdlib>

namespace jfc {

namespace {

// Round-to-nearest integer quotient with ties toward zero.  Ties must not go
// away from zero: at |num| = |den|/2 that choice alternates sign forever and
// the descent never reaches the S step.
std::int64_t nearest_quotient(std::int64_t num, std::int64_t den) {
  std::int64_t q0 = num / den;  // truncation toward zero
  std::int64_t best = q0;
  std::int64_t best_rem = std::llabs(num - q0 * den);
  for (std::int64_t q : {q0 - 1, q0 + 1}) {
    std::int64_t rem = std::llabs(num - q * den);
    if (rem < best_rem || (rem == best_rem && std::llabs(q) < std::llabs(best))) {
      best = q;
      best_rem = rem;
    }
  }
  return best;
}

}  // namespace

Word word_decompose(GroupElement gamma) {
  gamma.check();
  // Peel generators off the left: we find w with gamma = w * rest and recurse
  // on rest, so tokens are collected in order.
  std::vector<WordToken> tokens;
  GroupElement m = gamma;
  while (m.c != 0) {
    std::int64_t q = nearest_quotient(m.a, m.c);
    if (q != 0) {
      tokens.push_back({WordToken::T, q});
      m = T_power(-q) * m;  // removes T^q from the left
      continue;
    }
    // |a| <= |c|/2: multiply by S^-1 on the left, S^-1 = [[0,1],[-1,0]];
    // the new lower-left entry is -a, so |c| strictly decreases.
    tokens.push_back({WordToken::S, 1});
    m = GroupElement{0, 1, -1, 0} * m;
  }
  // m = [[e, b],[0, e]] with e = +-1.
  if (m.a == 1) {
    if (m.b != 0) tokens.push_back({WordToken::T, m.b});
  } else {
    // -T^{-b} = S^2 T^{-b}
    tokens.push_back({WordToken::S, 2});
    if (m.b != 0) tokens.push_back({WordToken::T, -m.b});
  }
  return Word{std::move(tokens)};
}

GroupElement matrix_from_row(std::int64_t c, std::int64_t d) {
  if (c == 0) {
    if (d == 1) return kIdentity;
    if (d == -1) return kMinusI;
    throw std::invalid_argument("matrix_from_row: c=0 needs d=+-1");
  }
  if (std::gcd(std::llabs(c), std::llabs(d)) != 1)
    throw std::invalid_argument("matrix_from_row: gcd(c,d) != 1");
  // Extended Euclid for a*d - b*c = 1.
  std::int64_t old_r = c, r = d, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  // old_s*c + old_t*d = old_r = +-gcd = +-1.
  std::int64_t sign = old_r > 0 ? 1 : -1;
  std::int64_t a = sign * old_t, b = -sign * old_s;
  GroupElement g{a, b, c, d};
  g.check();
  return g;
}

std::vector<GroupElement> coset_reps(std::int64_t C) {
  if (C < 1) throw std::invalid_argument("coset_reps: C >= 1 required");
  std::vector<GroupElement> reps;
  reps.push_back(kIdentity);
  for (std::int64_t c = 1; c <= C; ++c)
    for (std::int64_t d = 0; d < c; ++d)
      if (std::gcd(c, d) == 1) reps.push_back(matrix_from_row(c, d));
  return reps;
}

GroupElement reduce_to_fundamental(Complex tau, Complex* out) {
  GroupElement g = kIdentity;
  for (int iter = 0; iter < 256; ++iter) {
    double n = std::round(tau.real());
    if (n != 0) {
      tau -= n;
      g = T_power(-static_cast<std::int64_t>(n)) * g;
    }
    if (std::norm(tau) < 1.0 - 1e-14) {
      tau = -1.0 / tau;
      g = kS * g;
    } else {
      break;
    }
  }
  if (out) *out = tau;
  return g;
}

}  // namespace jfc
