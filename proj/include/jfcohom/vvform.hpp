#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "jfcohom/fourier.hpp"
#include "jfcohom/group.hpp"
#include "jfcohom/multiplier.hpp"

namespace jfc {

// Weight, multiplier, type and cusp data for one space of vector-valued
// forms.  Vector-valued weights are integers throughout (the half-integer
// weights live on the Jacobi side of the theta bridge).
struct VVContext {
  int weight = 0;
  MultiplierSystem chi;
  UnitaryRep rho;
  KappaDiagonal kappa;
  CuspData cusp;

  int dim() const { return rho.dim(); }
  double lambda_d() const { return to_double(cusp.width); }

  VVContext conjugated() const;

  // chi(g) rho(g) and the slash of an evaluator.
  Matrix chi_rho(const GroupElement& g) const { return chi.eval(g) * rho.eval(g); }
};

// Trivial 1-dimensional context (classical scalar forms of even weight).
VVContext make_trivial_context(int weight);

// Context of the theta decomposition for index m and Jacobi multiplier
// chi = eta^r: chi' = eta^(r-1) viewed at integer weight `weight`, type
// rho'(m).  Requires r odd so that r-1 gives an integer weight.
VVContext make_theta_context(int m, int r, int weight);

// chi(g)^-1 (c tau + d)^-w rho(g)^-1 f(g tau).
Vector vv_slash_eval(const std::function<Vector(Complex)>& f, const GroupElement& g,
                     const VVContext& ctx, Complex tau);

enum class FormKind { Cusp, Holomorphic, WeaklyHolomorphic };

struct VVForm {
  VVContext ctx;
  FormKind kind = FormKind::Holomorphic;
  std::vector<FourierSeries> components;  // one per dimension, kappa matching ctx

  Vector eval(Complex tau) const;
  // Pullback to the fundamental domain before summing the series; accurate at
  // any height for genuinely modular data.
  Vector eval_reduced(Complex tau) const;

  VVForm derivative_pow(int order) const;  // termwise (d/dtau)^order
};

// Poincare seed: explicit signed frequency nu (in kappa_alpha + Z), component
// alpha, coefficient b.  nu > 0 seeds a cusp series, nu < 0 a polar one; the
// sign convention in the literature's integer index n is absorbed here.
struct PoincareSpec {
  Rational nu;
  int alpha = 0;
  Complex b{1, 0};
};

// Cusp seed nu = n + kappa_alpha (> 0 required).
PoincareSpec cusp_spec(int n, int alpha, const VVContext& ctx, Complex b = {1, 0});

// The paper's index map n -> n' (kappa = 0: -n; kappa > 0: 1 - n), acting on
// the integer n with seed exponent -n + kappa_alpha.
std::int64_t supplementary_index(std::int64_t n, bool kappa_is_zero);

// f = sum b_i P(nu_i, alpha_i) over (chi, rho) maps to
// f* = sum conj(b_i) P(-nu_i, alpha_i) over the conjugated context; the
// principal part of f* is sum conj(b_i) e^{-2 pi i nu_i tau / lambda}.
std::vector<PoincareSpec> supplementary_data(const std::vector<PoincareSpec>& specs);

struct PoincareDiagnostics {
  bool stagnation = false;   // C vs C/2 partial sums differ by > 10x tol
  double tail_change = 0;    // |full - half| max over components
};

// Poincare series sum over <Q>\Gamma truncated at lower-left entries
// 0 < c <= C.  Base rows come from coset_reps; the d ladder d0 + j*c is
// unfolded with the exact kappa phases, and the +-(c,d) pair is folded into
// the constant vector u = (e_alpha + rho(-I)^-1 e_alpha / (chi(-I) e^{i pi
// w})) / 2, which realizes the paper's 1/2 prefactor.
class PoincareSeries {
 public:
  PoincareSeries(VVContext ctx, std::int64_t C, double term_tol = 1e-14);

  const VVContext& context() const { return ctx_; }
  std::int64_t truncation() const { return C_; }

  Vector eval(const std::vector<PoincareSpec>& specs, Complex tau,
              PoincareDiagnostics* diag = nullptr, double tol = 1e-9) const;
  Vector eval(const PoincareSpec& spec, Complex tau,
              PoincareDiagnostics* diag = nullptr, double tol = 1e-9) const;

 private:
  struct Row {
    std::int64_t c, d0;
    double a_over_c;      // gamma acts as a/c - 1/(c (c tau + d))
    Matrix inv_weighted;  // rho(gamma)^-1 / chi(gamma)
  };
  Vector pair_average(int alpha) const;

  VVContext ctx_;
  std::int64_t C_;
  double term_tol_;
  std::vector<Row> rows_;
};

// Componentwise Fourier extraction of the truncated Poincare sum at height y.
// kind = Cusp when every seed frequency is positive.  Coefficients of cusp
// output with n + kappa <= 0 are dropped; the largest dropped magnitude is
// reported so callers can check it against tolerance.
struct PoincareFourierResult {
  VVForm form;
  double max_dropped = 0;
};
PoincareFourierResult poincare_fourier(const PoincareSeries& series,
                                       const std::vector<PoincareSpec>& specs,
                                       std::int64_t n_min, std::int64_t n_max,
                                       double y = 2.0);

// Principal-part datum for cf_constant: coefficient a at integer index l of
// component t, frequency (l + kappa_t)/lambda < 0.
struct PrincipalTerm {
  std::int64_t l;
  int t;
  Complex a;
};

// The c_f vector of a weakly holomorphic form with pole only at i-infinity:
//   (c_f)_j = delta_{kappa_j,0} / (lambda (k+1)!) sum_{t,l<0} sum_{C+} a(l,t)
//             (-2 pi i / c)^{k+2} chi^-1(gamma) rho(gamma^-1)_{j,t}
//             e^{2 pi i (l+kappa_t) a / (c lambda)},
// C+ being the c > 0 double-coset representatives normalized to 0 <= a < c
// lambda, truncated at c <= C.
Vector cf_constant(const VVContext& ctx, int k, const std::vector<PrincipalTerm>& principal,
                   std::int64_t C, PoincareDiagnostics* diag = nullptr);

std::vector<PrincipalTerm> principal_part_of(const std::vector<PoincareSpec>& supp_specs,
                                             const VVContext& supp_ctx);

}  // namespace jfc
