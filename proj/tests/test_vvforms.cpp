#include "doctest.h"

#include <random>

#include "jfcohom/vvform.hpp"
#include "oracles.hpp"

using namespace jfc;

TEST_CASE("poincare series reproduces the discriminant ratios") {
  auto ctx = make_trivial_context(12);
  // Extracting a(3) at height 2 amplifies pointwise error by e^{12 pi}, so
  // the term cutoff has to sit near the bottom of double precision.
  PoincareSeries series(ctx, 200, 1e-18);
  auto spec = cusp_spec(1, 0, ctx);
  auto res = poincare_fourier(series, {spec}, 1, 3, 2.0);
  auto tau = oracle::delta_coefficients(3);

  Complex a1 = res.form.components[0].get(1);
  Complex a2 = res.form.components[0].get(2);
  Complex a3 = res.form.components[0].get(3);
  CHECK(std::abs(a2 / a1 - Complex(double(tau[2]), 0)) < 1e-3);
  CHECK(std::abs(a3 / a1 - Complex(double(tau[3]), 0)) < 1e-2);
  CHECK(res.form.kind == FormKind::Cusp);
}

TEST_CASE("poincare seed coefficient is delta in a small-frequency context") {
  // Weight 12 theta context (m=1, chi = eta^25): kappa = (1/24, 19/24); the
  // Kloosterman-Bessel corrections at seed frequency 1/24 are far below 1e-6.
  auto ctx = make_theta_context(1, 25, 12);
  REQUIRE(ctx.kappa.kappa[0] == Rational(1, 24));
  REQUIRE(ctx.kappa.kappa[1] == Rational(19, 24));
  PoincareSeries series(ctx, 200, 1e-18);
  auto spec = cusp_spec(0, 0, ctx);  // nu = 1/24
  auto res = poincare_fourier(series, {spec}, 0, 2, 2.0);
  CHECK(std::abs(res.form.components[0].get(0) - Complex(1, 0)) < 1e-6);
  CHECK(res.max_dropped < 1e-6);
}

TEST_CASE("poincare evaluation is Q-equivariant") {
  auto ctx = make_theta_context(1, 9, 4);
  PoincareSeries series(ctx, 80);
  auto spec = cusp_spec(1, 0, ctx);
  Complex tau{0.21, 1.4};
  Vector shifted = series.eval(spec, tau + 1.0);
  Vector base = series.eval(spec, tau);
  Matrix phase = ctx.chi_rho(kT);
  Vector expect = phase * base;
  for (int t = 0; t < ctx.dim(); ++t) CHECK(std::abs(shifted[t] - expect[t]) < 1e-10);
}

TEST_CASE("poincare evaluation is slash invariant up to truncation error") {
  auto ctx = make_trivial_context(12);
  PoincareSeries series(ctx, 200);
  auto spec = cusp_spec(1, 0, ctx);
  auto f = [&](Complex tau) { return series.eval(spec, tau); };

  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> ux(-0.4, 0.4), uy(0.9, 1.8);
  std::vector<GroupElement> gs = {kS, kT * kS, kS * kT, GroupElement{1, 0, 1, 1},
                                  GroupElement{2, 1, 1, 1}, GroupElement{1, -1, 2, -1},
                                  GroupElement{3, 1, 2, 1}, GroupElement{1, 1, -1, 0},
                                  GroupElement{-1, 0, 3, -1}, GroupElement{2, -1, 3, -1}};
  for (const auto& g : gs) {
    Complex tau{ux(rng), uy(rng)};
    Vector slashed = vv_slash_eval(f, g, ctx, tau);
    Vector direct = f(tau);
    CHECK((slashed - direct).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("vv slash composes as a right action") {
  auto ctx = make_theta_context(1, 9, 4);
  auto f = [](Complex tau) {
    Vector v(2);
    v[0] = std::exp(TWO_PI_I * 0.37 * tau) + 0.2 * tau;
    v[1] = 1.0 / (tau + Complex(0, 2)) + std::exp(TWO_PI_I * 0.11 * tau);
    return v;
  };
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> ux(-1, 1), uy(0.4, 2.2);
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<GroupElement> pool = {kS, kT, kS * kT, kT * kS, GroupElement{1, 0, 1, 1},
                                    GroupElement{2, 1, 1, 1}};
  for (int i = 0; i < 50; ++i) {
    GroupElement g1 = pool[pick(rng)], g2 = pool[pick(rng)];
    Complex tau{ux(rng), uy(rng)};
    auto f_g1 = [&](Complex t) { return vv_slash_eval(f, g1, ctx, t); };
    Vector lhs = vv_slash_eval(f_g1, g2, ctx, tau);
    Vector rhs = vv_slash_eval(f, g1 * g2, ctx, tau);
    double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() / scale < 1e-9);
  }
}

TEST_CASE("vv slash by identity fixes anything") {
  auto ctx = make_theta_context(2, 9, 4);
  auto f = [&](Complex tau) {
    Vector v(4);
    for (int i = 0; i < 4; ++i) v[i] = std::sin(0.3 * (i + 1)) * std::exp(TWO_PI_I * 0.2 * tau);
    return v;
  };
  Complex tau{0.3, 1.1};
  CHECK((vv_slash_eval(f, kIdentity, ctx, tau) - f(tau)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("supplementary data rules") {
  auto ctx = make_theta_context(1, 9, 4);  // kappa = (3/8, 1/8), both positive
  auto spec = cusp_spec(1, 0, ctx, Complex(0.5, -2));
  CHECK(spec.nu == Rational(11, 8));

  auto supp = supplementary_data({spec});
  REQUIRE(supp.size() == 1);
  CHECK(supp[0].nu == Rational(-11, 8));
  CHECK(supp[0].alpha == 0);
  CHECK(std::abs(supp[0].b - Complex(0.5, 2)) < 1e-15);

  // Involution up to the kappa/kappa' exchange.
  auto back = supplementary_data(supp);
  CHECK(back[0].nu == spec.nu);
  CHECK(std::abs(back[0].b - spec.b) < 1e-15);

  CHECK(supplementary_data({}).empty());

  // Paper's integer index bookkeeping.
  CHECK(supplementary_index(1, true) == -1);
  CHECK(supplementary_index(1, false) == 0);

  // Principal part of f*: frequency -nu at integer index l with l + kappa' = -nu.
  auto supp_ctx = ctx.conjugated();
  CHECK(supp_ctx.kappa.kappa[0] == Rational(5, 8));
  auto pp = principal_part_of(supp, supp_ctx);
  REQUIRE(pp.size() == 1);
  CHECK(pp[0].l == -2);
  CHECK(pp[0].t == 0);
}

TEST_CASE("cusp-kind extraction drops nothing of size") {
  auto ctx = make_theta_context(1, 9, 4);
  PoincareSeries series(ctx, 150);
  auto res = poincare_fourier(series, {cusp_spec(1, 0, ctx)}, -3, 4, 1.0);
  CHECK(res.max_dropped < 1e-6);
  for (const auto& comp : res.form.components)
    for (const auto& [n, a] : comp.coeffs) CHECK(comp.frequency(n) > 0);
}

TEST_CASE("cf_constant trivial and convergent cases") {
  // All principal-part coefficients zero -> zero vector.
  auto ctx12 = make_trivial_context(12);
  Vector z = cf_constant(ctx12, 10, {}, 50);
  CHECK(z.cwiseAbs().maxCoeff() == 0.0);

  // kappa_j != 0 for all j -> zero vector by the delta factor.
  auto ctx = make_theta_context(1, 9, 4).conjugated();
  Vector z2 = cf_constant(ctx, 2, {{-2, 0, Complex(1, 0)}}, 60);
  CHECK(z2.cwiseAbs().maxCoeff() == 0.0);

  // Single pole, p = 1, k = 10: doubling C moves the value by < 1e-3.
  Vector c100 = cf_constant(ctx12, 10, {{-1, 0, Complex(1, 0)}}, 100);
  Vector c200 = cf_constant(ctx12, 10, {{-1, 0, Complex(1, 0)}}, 200);
  CHECK((c200 - c100).cwiseAbs().maxCoeff() < 1e-3);
  CHECK(c200.cwiseAbs().maxCoeff() > 1e-6);  // genuinely nonzero sum
}

TEST_CASE("VVForm reduced evaluation matches the series where both are valid") {
  auto ctx = make_trivial_context(12);
  PoincareSeries series(ctx, 200);
  auto res = poincare_fourier(series, {cusp_spec(1, 0, ctx)}, 1, 12, 0.9);
  const VVForm& f = res.form;
  // At a fundamental-domain point both paths agree trivially; at a low point
  // the reduced path pulls back first.
  Complex low{0.37, 0.22};
  Vector direct = series.eval(cusp_spec(1, 0, ctx), low);
  Vector reduced = f.eval_reduced(low);
  CHECK(std::abs(direct[0] - reduced[0]) < 1e-4 * std::max(1.0, std::abs(direct[0])));
}
