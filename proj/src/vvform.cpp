#include "jfcohom/vvform.hpp"

#include <cmath>
#include <numeric>

namespace jfc {

VVContext VVContext::conjugated() const {
  VVContext out;
  out.weight = weight;
  out.chi = chi.conjugated();
  out.rho = rho.conjugated();
  out.cusp = cusp;
  out.kappa.kappa.reserve(kappa.kappa.size());
  for (const Rational& k : kappa.kappa)
    out.kappa.kappa.push_back(k == 0 ? Rational(0) : 1 - k);
  return out;
}

VVContext make_trivial_context(int weight) {
  VVContext ctx;
  ctx.weight = weight;
  ctx.chi = MultiplierSystem::trivial(weight);
  ctx.rho = UnitaryRep::trivial(1);
  ctx.kappa = kappa_diag(ctx.chi, ctx.rho, ctx.cusp.generator);
  return ctx;
}

VVContext make_theta_context(int m, int r, int weight) {
  if ((r % 2 + 2) % 2 != 1)
    throw std::invalid_argument("make_theta_context: r must be odd (Jacobi weight half-integral)");
  VVContext ctx;
  ctx.weight = weight;
  ctx.chi = MultiplierSystem::eta_power(r - 1, Rational(weight));
  ctx.rho = weil_rep(m);
  ctx.kappa = kappa_diag(ctx.chi, ctx.rho, ctx.cusp.generator);
  return ctx;
}

Vector vv_slash_eval(const std::function<Vector(Complex)>& f, const GroupElement& g,
                     const VVContext& ctx, Complex tau) {
  Complex scale = 1.0 / (ctx.chi.eval(g) * weight_pow(g.j_factor(tau), ctx.weight));
  return scale * Matrix(ctx.rho.eval(g).inverse()) * f(g.act(tau));
}

Vector VVForm::eval(Complex tau) const {
  const int p = ctx.dim();
  Vector out(p);
  for (int j = 0; j < p; ++j) out[j] = components[j].eval(tau);
  return out;
}

Vector VVForm::eval_reduced(Complex tau) const {
  Complex tf;
  GroupElement g0 = reduce_to_fundamental(tau, &tf);
  if (g0 == kIdentity) return eval(tau);
  GroupElement ginv = g0.inverse();
  Complex scale = ctx.chi.eval(ginv) * weight_pow(ginv.j_factor(tf), ctx.weight);
  return scale * Matrix(ctx.rho.eval(ginv)) * eval(tf);
}

VVForm VVForm::derivative_pow(int order) const {
  VVForm out = *this;
  for (auto& comp : out.components)
    for (int i = 0; i < order; ++i) comp = comp.derivative();
  return out;
}

PoincareSpec cusp_spec(int n, int alpha, const VVContext& ctx, Complex b) {
  if (alpha < 0 || alpha >= ctx.dim()) throw std::invalid_argument("cusp_spec: bad component");
  PoincareSpec s{Rational(n) + ctx.kappa.kappa[alpha], alpha, b};
  if (s.nu <= 0) throw std::invalid_argument("cusp_spec: seed frequency must be positive");
  return s;
}

std::int64_t supplementary_index(std::int64_t n, bool kappa_is_zero) {
  return kappa_is_zero ? -n : 1 - n;
}

std::vector<PoincareSpec> supplementary_data(const std::vector<PoincareSpec>& specs) {
  std::vector<PoincareSpec> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back({-s.nu, s.alpha, std::conj(s.b)});
  return out;
}

PoincareSeries::PoincareSeries(VVContext ctx, std::int64_t C, double term_tol)
    : ctx_(std::move(ctx)), C_(C), term_tol_(term_tol) {
  if (C_ < 1) throw std::invalid_argument("PoincareSeries: C >= 1");
  const Matrix& T = ctx_.rho.on_T();
  for (int i = 0; i < ctx_.dim(); ++i)
    for (int j = 0; j < ctx_.dim(); ++j)
      if (i != j && std::abs(T(i, j)) > 1e-12)
        throw std::invalid_argument("PoincareSeries: rho(T) must be diagonal");
  for (const GroupElement& g : coset_reps(C_)) {
    if (g == kIdentity) continue;
    Row row;
    row.c = g.c;
    row.d0 = g.d;
    row.a_over_c = double(g.a) / double(g.c);
    row.inv_weighted = Matrix(ctx_.rho.eval(g).inverse()) / ctx_.chi.eval(g);
    rows_.push_back(std::move(row));
  }
}

Vector PoincareSeries::pair_average(int alpha) const {
  const int p = ctx_.dim();
  Vector e = Vector::Zero(p);
  e[alpha] = 1;
  Complex s = 1.0 / (ctx_.chi.eval(kMinusI) * integer_pow(Complex(-1, 0), ctx_.weight));
  Matrix minus_inv = ctx_.rho.eval(kMinusI).inverse();
  return 0.5 * (e + s * (minus_inv * e));
}

Vector PoincareSeries::eval(const PoincareSpec& spec, Complex tau,
                            PoincareDiagnostics* diag, double tol) const {
  return eval(std::vector<PoincareSpec>{spec}, tau, diag, tol);
}

Vector PoincareSeries::eval(const std::vector<PoincareSpec>& specs, Complex tau,
                            PoincareDiagnostics* diag, double tol) const {
  const int p = ctx_.dim();
  const int w = ctx_.weight;
  const double lam = ctx_.lambda_d();
  const double x = tau.real(), y = tau.imag();
  if (y <= 0) throw std::domain_error("PoincareSeries::eval: Im tau must be positive");
  // Terms with |c tau + d|^2 beyond K fall under term_tol pointwise.
  const double K = std::pow(term_tol_, -2.0 / std::max(3, w));

  std::vector<CompensatedSum> acc(p), half(p);  // half: partial sum c <= C/2

  std::vector<double> kap(p);
  for (int t = 0; t < p; ++t) kap[t] = to_double(ctx_.kappa.kappa[t]);

  for (const PoincareSpec& spec : specs) {
    const double nu = to_double(spec.nu) / lam;
    Vector u = pair_average(spec.alpha) * spec.b;

    Complex seed = std::exp(TWO_PI_I * nu * tau);
    for (int t = 0; t < p; ++t) {
      acc[t].add(seed * u[t]);
      half[t].add(seed * u[t]);
    }

    for (const Row& row : rows_) {
      const double cy = double(row.c) * y;
      if (cy * cy > K) continue;
      const double R = std::sqrt(K - cy * cy);
      const double center = -(double(row.c) * x + double(row.d0)) / double(row.c);
      const std::int64_t j_lo = static_cast<std::int64_t>(std::ceil(center - R / double(row.c)));
      const std::int64_t j_hi = static_cast<std::int64_t>(std::floor(center + R / double(row.c)));
      if (j_hi < j_lo) continue;

      Vector v = row.inv_weighted * u;
      const bool in_half = 2 * row.c <= C_;
      for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        Complex jz = Complex(double(row.c) * x + double(row.d0 + j * row.c), cy);
        Complex inv_jw = integer_pow(1.0 / jz, w);
        Complex gamma_tau = row.a_over_c - 1.0 / (double(row.c) * jz);
        Complex common = inv_jw * std::exp(TWO_PI_I * nu * gamma_tau);
        for (int t = 0; t < p; ++t) {
          // exp(-2 pi i j kappa_t) from pulling T^j through chi rho.
          Complex phase = j == 0 ? Complex(1, 0)
                                 : std::exp(TWO_PI_I * Complex(-double(j) * kap[t]));
          Complex term = common * phase * v[t];
          acc[t].add(term);
          if (in_half) half[t].add(term);
        }
      }
    }
  }

  Vector out(p);
  double tail = 0;
  for (int t = 0; t < p; ++t) {
    out[t] = acc[t].value();
    tail = std::max(tail, std::abs(out[t] - half[t].value()));
  }
  if (diag) {
    diag->tail_change = tail;
    diag->stagnation = tail > 10 * tol;
  }
  return out;
}

PoincareFourierResult poincare_fourier(const PoincareSeries& series,
                                       const std::vector<PoincareSpec>& specs,
                                       std::int64_t n_min, std::int64_t n_max,
                                       double y) {
  const VVContext& ctx = series.context();
  const int p = ctx.dim();
  const double lam = ctx.lambda_d();
  const std::int64_t span = n_max - n_min + 1;
  const int N = static_cast<int>(std::max<std::int64_t>(16, 4 * span));

  std::vector<Vector> samples(N);
  for (int j = 0; j < N; ++j) samples[j] = series.eval(specs, Complex(lam * j / N, y));

  PoincareFourierResult out;
  out.form.ctx = ctx;
  bool all_positive = true;
  for (const auto& s : specs) all_positive = all_positive && s.nu > 0;
  out.form.kind = all_positive ? FormKind::Cusp : FormKind::WeaklyHolomorphic;

  for (int t = 0; t < p; ++t) {
    FourierSeries comp(ctx.cusp.width, ctx.kappa.kappa[t]);
    for (std::int64_t n = n_min; n <= n_max; ++n) {
      const double freq = comp.frequency(n);
      CompensatedSum sum;
      for (int j = 0; j < N; ++j) {
        double xx = lam * j / N;
        sum.add(samples[j][t] * std::exp(-TWO_PI_I * freq * Complex(xx, y)));
      }
      Complex a = sum.value() / double(N);
      if (out.form.kind == FormKind::Cusp && freq <= 0) {
        out.max_dropped = std::max(out.max_dropped, std::abs(a));
        continue;
      }
      if (std::abs(a) > 1e-14) comp.set(n, a);
    }
    out.form.components.push_back(std::move(comp));
  }
  return out;
}

std::vector<PrincipalTerm> principal_part_of(const std::vector<PoincareSpec>& supp_specs,
                                             const VVContext& supp_ctx) {
  std::vector<PrincipalTerm> pp;
  for (const auto& s : supp_specs) {
    if (s.nu >= 0) continue;
    Rational l = s.nu - supp_ctx.kappa.kappa[s.alpha];
    if (denominator(l) != 1)
      throw std::invalid_argument("principal_part_of: frequency not in kappa + Z");
    pp.push_back({numerator(l).convert_to<std::int64_t>(), s.alpha, s.b});
  }
  return pp;
}

Vector cf_constant(const VVContext& ctx, int k, const std::vector<PrincipalTerm>& principal,
                   std::int64_t C, PoincareDiagnostics* diag) {
  const int p = ctx.dim();
  const double lam = ctx.lambda_d();
  Vector out = Vector::Zero(p);
  Vector half = Vector::Zero(p);
  if (principal.empty()) {
    if (diag) *diag = {};
    return out;
  }

  double factorial = 1;
  for (int i = 2; i <= k + 1; ++i) factorial *= i;
  const double front = 1.0 / (lam * factorial);

  for (std::int64_t c = 1; c <= C; ++c) {
    Complex pow_c = integer_pow(Complex(0, -2 * PI) / double(c), k + 2);
    for (std::int64_t d = 0; d < c; ++d) {
      if (std::gcd(c, d) != 1) continue;
      GroupElement g = matrix_from_row(c, d);
      // Normalize to the representative with 0 <= a < c lambda.
      std::int64_t a_mod = ((g.a % c) + c) % c;
      g = T_power((a_mod - g.a) / c) * g;
      Complex chi_inv = 1.0 / ctx.chi.eval(g);
      Matrix rho_inv = ctx.rho.eval(g.inverse());
      for (const PrincipalTerm& termdat : principal) {
        double freq = double(termdat.l) + to_double(ctx.kappa.kappa[termdat.t]);
        Complex phase = std::exp(TWO_PI_I * freq * double(g.a) / (double(c) * lam));
        Complex scalar = front * pow_c * chi_inv * phase * termdat.a;
        for (int j = 0; j < p; ++j) {
          if (ctx.kappa.kappa[j] != 0) continue;  // delta_{kappa_j, 0}
          Complex term = scalar * rho_inv(j, termdat.t);
          out[j] += term;
          if (2 * c <= C) half[j] += term;
        }
      }
    }
  }
  if (diag) {
    diag->tail_change = principal.empty() ? 0 : (out - half).cwiseAbs().maxCoeff();
    diag->stagnation = diag->tail_change > 1e-8;
  }
  return out;
}

}  // namespace jfc
