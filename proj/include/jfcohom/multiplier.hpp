#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

#include "jfcohom/group.hpp"
#include "jfcohom/numeric.hpp"
#include "jfcohom/rational.hpp"

namespace jfc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// j_w(g, tau) = (c tau + d)^w with the principal branch.
inline Complex automorphy_j(const GroupElement& g, Complex tau, double w) {
  return weight_pow(g.j_factor(tau), w);
}

// The weight-w consistency cocycle
//   sigma_w(g1, g2) = j_w(g1, g2 tau) j_w(g2, tau) / j_w(g1 g2, tau),
// independent of tau; a unit complex number.  Multiplier systems of weight w
// compose as chi(g1 g2) = chi(g1) chi(g2) sigma_w(g1, g2).
Complex sigma_cocycle(const GroupElement& g1, const GroupElement& g2, double w);

// Dedekind eta via the product, truncated when the next factor is within
// 1e-17 of 1.
Complex eta_eval(Complex tau);

// The weight-1/2 eta multiplier chi''(g) = eta(g tau) / ((c tau + d)^{1/2}
// eta(tau)), checked at two base points for branch consistency.
Complex eta_multiplier(const GroupElement& g);

// Scalar multiplier system of weight w on SL(2,Z), stored by its values on S
// and T and extended to arbitrary elements along words with the sigma_w
// cocycle.  Word independence of the extension is exactly the consistency
// condition; consistency_residual() measures it on the group relations.
class MultiplierSystem {
 public:
  MultiplierSystem() = default;
  MultiplierSystem(Rational weight, Complex on_S, Complex on_T);

  // chi = (eta multiplier)^r, weight r/2, viewed at weight `weight` (which
  // must differ from r/2 by an even integer).
  static MultiplierSystem eta_power(int r, std::optional<Rational> weight = std::nullopt);
  static MultiplierSystem trivial(Rational weight);

  const Rational& weight() const { return weight_; }
  double weight_d() const { return to_double(weight_); }
  Complex on_S() const { return vS_; }
  Complex on_T() const { return vT_; }
  std::optional<int> eta_power_exponent() const { return eta_power_; }

  Complex eval(const GroupElement& g) const;
  MultiplierSystem conjugated() const;  // valid for integer weight only

  // Max deviation of the word extension on the relation words S^4 and
  // (ST)^3 S^-2, both of which must evaluate to chi(I) = 1.
  double consistency_residual() const;

 private:
  Rational weight_ = 0;
  Complex vS_{1, 0}, vT_{1, 0};
  std::optional<int> eta_power_;
  mutable std::map<std::uint64_t, Complex> cache_;
};

// Unitary representation given on the generators and extended as a true
// homomorphism along words.  relation_residual() reports how far the
// generator matrices are from satisfying S^4 = I and (ST)^3 = S^2.
class UnitaryRep {
 public:
  UnitaryRep() = default;
  UnitaryRep(Matrix on_S, Matrix on_T);

  static UnitaryRep trivial(int dim = 1);

  int dim() const { return static_cast<int>(S_.rows()); }
  const Matrix& on_S() const { return S_; }
  const Matrix& on_T() const { return T_; }

  Matrix eval(const GroupElement& g) const;
  UnitaryRep conjugated() const;

  double unitarity_residual() const;
  double relation_residual() const;

 private:
  Matrix S_, T_;
  mutable std::map<std::uint64_t, Matrix> cache_;
};

// The Weil-type representation rho' of the theta expansion for index m:
//   rho'(T) e_a = chi''(T) exp(-2 pi i m a^2) e_a,
//   rho'(S) e_a = chi''(S) i^{1/2} / sqrt(2m) sum_b exp(2 pi i 2m a b) e_b,
// with a, b in {0, 1/(2m), ..., (2m-1)/(2m)}.  Throws if the generator
// matrices fail the SL(2,Z) relations beyond 1e-9 (projective failure).
UnitaryRep weil_rep(int m);

// Theta characteristic of slot j for index m: a = j / (2m).
inline Rational theta_characteristic(int j, int m) { return Rational(j, 2 * m); }

struct KappaDiagonal {
  std::vector<Rational> kappa;  // each in [0,1)
  int dim() const { return static_cast<int>(kappa.size()); }
};

// Diagonal exponents of chi(Q) rho(Q): kappa_j in [0,1) with
// exp(2 pi i kappa_j) the j-th diagonal entry.  Rejects non-diagonal
// chi(Q) rho(Q).
KappaDiagonal kappa_diag(const MultiplierSystem& chi, const UnitaryRep& rho,
                         const GroupElement& Q);

}  // namespace jfc
