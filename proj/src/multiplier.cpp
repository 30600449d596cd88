#include "jfcohom/multiplier.hpp"

#include <array>
#include <cmath>

namespace jfc {

namespace {

const Complex kBasePoint{0.0, 2.0};     // tau_0 = 2i
const Complex kCheckPoint{0.3, 1.1};    // second point for branch checks

// z^e for |z| = 1 and integer e, via the argument; stays on the unit circle
// even for e ~ 1e6 where repeated multiplication would drift.
Complex unit_pow(Complex z, std::int64_t e) {
  double arg = std::atan2(z.imag(), z.real());
  return std::polar(1.0, arg * double(e));
}



}  // namespace

Complex sigma_cocycle(const GroupElement& g1, const GroupElement& g2, double w) {
  Complex t2 = g2.act(kBasePoint);
  Complex num = automorphy_j(g1, t2, w) * automorphy_j(g2, kBasePoint, w);
  Complex den = automorphy_j(g1 * g2, kBasePoint, w);
  return num / den;
}

Complex eta_eval(Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("eta_eval: Im tau must be positive");
  // |q|^n < 1e-17 needs about 40 / (2 pi Im tau) factors.
  if (tau.imag() < 2e-5)
    throw std::domain_error("eta_eval: Im tau too small for direct product");
  Complex q = std::exp(TWO_PI_I * tau);
  Complex prod{1, 0};
  Complex qn{1, 0};
  for (int n = 1; n < 500000; ++n) {
    qn *= q;
    prod *= (Complex(1, 0) - qn);
    if (std::abs(qn) < 1e-17) break;
  }
  return std::exp(Complex(0, PI / 12.0) * tau) * prod;
}

// Pointwise eta ratio; Im(g tau) ~ 1/(c^2 Im tau) caps the usable entry size,
// so this is the reference implementation for moderate gamma while
// MultiplierSystem::eta_power covers the rest through words.
Complex eta_multiplier(const GroupElement& g) {
  g.check();
  auto value_at = [&](Complex tau) {
    return eta_eval(g.act(tau)) / (principal_pow(g.j_factor(tau), 0.5) * eta_eval(tau));
  };
  Complex v0 = value_at(kBasePoint);
  Complex v1 = value_at(kCheckPoint);
  if (std::abs(v0 - v1) > 1e-10)
    throw std::domain_error("eta_multiplier: value depends on base point (branch error)");
  return v0;
}

MultiplierSystem::MultiplierSystem(Rational weight, Complex on_S, Complex on_T)
    : weight_(std::move(weight)), vS_(on_S), vT_(on_T) {
  if (std::abs(std::abs(vS_) - 1) > 1e-12 || std::abs(std::abs(vT_) - 1) > 1e-12)
    throw std::invalid_argument("MultiplierSystem: generator values must be unit modulus");
}

MultiplierSystem MultiplierSystem::eta_power(int r, std::optional<Rational> weight) {
  Rational w = weight.value_or(Rational(r, 2));
  Rational diff = w - Rational(r, 2);
  if (denominator(diff) != 1 || numerator(diff) % 2 != 0)
    throw std::invalid_argument("eta_power: weight must differ from r/2 by an even integer");
  MultiplierSystem chi(w, std::polar(1.0, -PI * r / 4.0), std::polar(1.0, PI * r / 12.0));
  chi.eta_power_ = r;
  return chi;
}

MultiplierSystem MultiplierSystem::trivial(Rational weight) {
  if (denominator(weight) != 1 || numerator(weight) % 2 != 0)
    throw std::invalid_argument("trivial multiplier needs even integer weight");
  MultiplierSystem chi(std::move(weight), Complex(1, 0), Complex(1, 0));
  chi.eta_power_ = 0;
  return chi;
}

Complex MultiplierSystem::eval(const GroupElement& g) const {
  auto key = g.hash_key();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const double w = weight_d();
  Complex val{1, 0};
  GroupElement cur = kIdentity;
  auto append = [&](const GroupElement& piece, Complex chi_piece) {
    val *= chi_piece * sigma_cocycle(cur, piece, w);
    cur = cur * piece;
  };
  for (const WordToken& tok : word_decompose(g).tokens) {
    if (tok.gen == WordToken::T) {
      append(T_power(tok.exp), unit_pow(vT_, tok.exp));
    } else {
      std::int64_t e = ((tok.exp % 4) + 4) % 4;
      for (std::int64_t i = 0; i < e; ++i) append(kS, vS_);
    }
  }
  cache_[key] = val;
  return val;
}

MultiplierSystem MultiplierSystem::conjugated() const {
  if (denominator(weight_) != 1)
    throw std::domain_error("MultiplierSystem::conjugated: integer weight required");
  MultiplierSystem chi(weight_, std::conj(vS_), std::conj(vT_));
  if (eta_power_) chi.eta_power_ = -*eta_power_;
  return chi;
}

double MultiplierSystem::consistency_residual() const {
  const double w = weight_d();
  // Accumulate along an explicit word; word independence of eval() is
  // equivalent to the relation words landing on chi(I) = 1 and chi(S^2).
  auto walk = [&](const std::vector<GroupElement>& pieces) {
    Complex val{1, 0};
    GroupElement cur = kIdentity;
    for (const auto& piece : pieces) {
      Complex chi_piece = piece == kS ? vS_ : vT_;
      val *= chi_piece * sigma_cocycle(cur, piece, w);
      cur = cur * piece;
    }
    return val;
  };
  Complex s4 = walk({kS, kS, kS, kS});
  Complex st3 = walk({kS, kT, kS, kT, kS, kT});
  Complex s2 = walk({kS, kS});
  return std::max(std::abs(s4 - Complex(1, 0)), std::abs(st3 - s2));
}

UnitaryRep::UnitaryRep(Matrix on_S, Matrix on_T) : S_(std::move(on_S)), T_(std::move(on_T)) {
  if (S_.rows() != S_.cols() || T_.rows() != T_.cols() || S_.rows() != T_.rows())
    throw std::invalid_argument("UnitaryRep: generator matrices must be square, same size");
}

UnitaryRep UnitaryRep::trivial(int dim) {
  return UnitaryRep(Matrix::Identity(dim, dim), Matrix::Identity(dim, dim));
}

Matrix UnitaryRep::eval(const GroupElement& g) const {
  auto key = g.hash_key();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const int p = dim();
  Matrix acc = Matrix::Identity(p, p);
  auto matpow = [&](const Matrix& m, std::int64_t e) {
    Matrix base = e < 0 ? Matrix(m.inverse()) : m;
    std::int64_t n = e < 0 ? -e : e;
    Matrix r = Matrix::Identity(p, p);
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  };
  for (const WordToken& tok : word_decompose(g).tokens) {
    if (tok.gen == WordToken::T)
      acc = acc * matpow(T_, tok.exp);
    else
      acc = acc * matpow(S_, ((tok.exp % 4) + 4) % 4);
  }
  cache_[key] = acc;
  return acc;
}

UnitaryRep UnitaryRep::conjugated() const {
  return UnitaryRep(S_.conjugate(), T_.conjugate());
}

double UnitaryRep::unitarity_residual() const {
  const int p = dim();
  Matrix I = Matrix::Identity(p, p);
  return std::max((S_ * S_.adjoint() - I).cwiseAbs().maxCoeff(),
                  (T_ * T_.adjoint() - I).cwiseAbs().maxCoeff());
}

double UnitaryRep::relation_residual() const {
  const int p = dim();
  Matrix s2 = S_ * S_;
  Matrix s4 = s2 * s2;
  Matrix st = S_ * T_;
  Matrix st3 = st * st * st;
  return std::max((s4 - Matrix::Identity(p, p)).cwiseAbs().maxCoeff(),
                  (st3 - s2).cwiseAbs().maxCoeff());
}

UnitaryRep weil_rep(int m) {
  if (m < 1) throw std::invalid_argument("weil_rep: m >= 1 required");
  const int p = 2 * m;
  const Complex chiS = std::polar(1.0, -PI / 4.0);  // eta multiplier at S
  const Complex chiT = std::polar(1.0, PI / 12.0);  // eta multiplier at T
  const Complex i_half = std::polar(1.0, PI / 4.0);

  Matrix T = Matrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    double a = double(j) / (2 * m);
    T(j, j) = chiT * std::exp(-TWO_PI_I * (m * a * a));
  }
  Matrix S = Matrix::Zero(p, p);
  const Complex scale = chiS * i_half / std::sqrt(2.0 * m);
  for (int jb = 0; jb < p; ++jb)
    for (int ja = 0; ja < p; ++ja) {
      double ab = double(ja) * double(jb) / (2.0 * m);  // 2m * a * b
      S(jb, ja) = scale * std::exp(TWO_PI_I * ab);
    }

  UnitaryRep rho(S, T);
  if (rho.unitarity_residual() > 1e-12)
    throw std::domain_error("weil_rep: generator matrices not unitary");
  if (rho.relation_residual() > 1e-9)
    throw std::domain_error("weil_rep: SL(2,Z) relations fail (projective failure)");
  return rho;
}

KappaDiagonal kappa_diag(const MultiplierSystem& chi, const UnitaryRep& rho,
                         const GroupElement& Q) {
  Matrix M = chi.eval(Q) * rho.eval(Q);
  const int p = rho.dim();
  double off = 0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j) off = std::max(off, std::abs(M(i, j)));
  if (off > 1e-10)
    throw std::domain_error("kappa_diag: chi(Q) rho(Q) is not diagonal");
  KappaDiagonal out;
  out.kappa.reserve(p);
  for (int j = 0; j < p; ++j) {
    double phase = std::atan2(M(j, j).imag(), M(j, j).real()) / (2 * PI);
    out.kappa.push_back(frac_part(snap_rational(phase, 4096, 1e-7)));
  }
  return out;
}

}  // namespace jfc
