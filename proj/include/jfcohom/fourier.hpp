#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "jfcohom/numeric.hpp"
#include "jfcohom/rational.hpp"

namespace jfc {

// One component's expansion sum_n a(n) exp(2 pi i (n + kappa) tau / lambda),
// truncated to finitely many n.
struct FourierSeries {
  Rational lambda = 1;      // width, positive
  Rational kappa = 0;       // offset in [0,1)
  std::map<std::int64_t, Complex> coeffs;

  FourierSeries() = default;
  FourierSeries(Rational width, Rational offset) : lambda(std::move(width)), kappa(std::move(offset)) {
    if (lambda <= 0) throw std::invalid_argument("FourierSeries: width must be positive");
    if (kappa < 0 || kappa >= 1) throw std::invalid_argument("FourierSeries: kappa outside [0,1)");
  }

  bool is_zero() const { return coeffs.empty(); }

  void set(std::int64_t n, Complex a) {
    if (a == Complex(0, 0))
      coeffs.erase(n);
    else
      coeffs[n] = a;
  }
  Complex get(std::int64_t n) const {
    auto it = coeffs.find(n);
    return it == coeffs.end() ? Complex(0, 0) : it->second;
  }

  // Frequency of index n as a double: (n + kappa) / lambda.
  double frequency(std::int64_t n) const {
    return (double(n) + to_double(kappa)) / to_double(lambda);
  }

  Complex eval(Complex tau) const {
    CompensatedSum acc;
    for (const auto& [n, a] : coeffs)
      acc.add(a * std::exp(TWO_PI_I * frequency(n) * tau));
    return acc.value();
  }

  // Termwise d/dtau.
  FourierSeries derivative() const {
    FourierSeries out(lambda, kappa);
    for (const auto& [n, a] : coeffs) out.set(n, a * TWO_PI_I * frequency(n));
    return out;
  }

  FourierSeries conjugated_data() const {
    // Coefficientwise conjugate with negated frequencies; pairs the series
    // for (chi, rho) with the one for the conjugate context.  Index n maps to
    // the integer part of -(n + kappa): kappa' = 1 - kappa for kappa > 0.
    FourierSeries out(lambda, kappa == 0 ? Rational(0) : 1 - kappa);
    for (const auto& [n, a] : coeffs) {
      std::int64_t np = kappa == 0 ? -n : -n - 1;
      out.set(np, std::conj(a));
    }
    return out;
  }
};

struct FourierExtractResult {
  std::map<std::int64_t, Complex> coeffs;
  bool aliasing_suspect = false;  // largest-|n| coefficient not << the rest
};

// Discrete Fourier inversion on one period at fixed height y: N uniform
// samples of f on [0, lambda) + iy, N >= 4 * span of n_range.  The caller
// guarantees f(x + lambda) = exp(2 pi i kappa) f(x).
FourierExtractResult fourier_extract(const std::function<Complex(Complex)>& f, double y,
                                     const Rational& lambda, const Rational& kappa,
                                     std::int64_t n_min, std::int64_t n_max, int oversample = 4);

}  // namespace jfc
