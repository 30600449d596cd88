#include "jfcohom/fourier.hpp"

#include <cmath>
#include <vector>

namespace jfc {

FourierExtractResult fourier_extract(const std::function<Complex(Complex)>& f, double y,
                                     const Rational& lambda, const Rational& kappa,
                                     std::int64_t n_min, std::int64_t n_max, int oversample) {
  if (n_max < n_min) throw std::invalid_argument("fourier_extract: empty range");
  if (y <= 0) throw std::invalid_argument("fourier_extract: height must be positive");
  const double lam = to_double(lambda);
  const double kap = to_double(kappa);
  const std::int64_t span = n_max - n_min + 1;
  const int N = static_cast<int>(std::max<std::int64_t>(16, oversample * span));

  std::vector<Complex> samples(N);
  for (int j = 0; j < N; ++j) {
    double x = lam * j / N;
    samples[j] = f(Complex(x, y));
  }

  FourierExtractResult out;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const double freq = (double(n) + kap) / lam;
    CompensatedSum acc;
    for (int j = 0; j < N; ++j) {
      double x = lam * j / N;
      // exp(-2 pi i freq (x + iy)) carries the exp(+2 pi freq y) growth that
      // undoes the decay of the mode at height y.
      acc.add(samples[j] * std::exp(-TWO_PI_I * freq * Complex(x, y)));
    }
    out.coeffs[n] = acc.value() / double(N);
  }

  // Aliasing heuristic: the extreme extracted coefficient should not dominate
  // the interior ones once the mode decay at height y is taken out.
  if (span >= 3) {
    double interior = 0, edge = 0;
    for (const auto& [n, a] : out.coeffs) {
      double weighted = std::abs(a) * std::exp(-2 * PI * (double(n) + kap) / lam * y);
      if (n == n_max)
        edge = weighted;
      else
        interior = std::max(interior, weighted);
    }
    if (edge > 10 * interior && edge > 1e-13) out.aliasing_suspect = true;
  }
  return out;
}

}  // namespace jfc
