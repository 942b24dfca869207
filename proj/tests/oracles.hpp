#pragma once

// Reference implementations that share no code with the library.

#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

/// F_p(a/b) by iterating the two functional equations on the exact rational a/b.
inline long double cdf_rational(long double p, std::int64_t a, std::int64_t b, int depth = 200) {
  const long double r = 1.0L / (p + 1.0L);
  long double offset = 0.0L, scale = 1.0L;
  for (int k = 0; k < depth; ++k) {
    if (a == 0) return offset;
    if (3 * a < b) {  // F(x) = r F(3x)
      a *= 3;
      scale *= r;
    } else if (3 * a <= 2 * b) {  // plateau
      return offset + scale * r;
    } else {  // F(x) = 1 - p r F(3(1 - x))
      a = 3 * (b - a);
      offset += scale;
      scale *= -p * r;
    }
  }
  return offset + 0.5L * scale;
}

/// Lower and upper Riemann sums of F_p over [0, a/b] on n cells, using the monotonicity of F.
struct Bracket {
  long double lower;
  long double upper;
};

inline Bracket integral_rational(long double p, std::int64_t a, std::int64_t b, std::int64_t n) {
  // Cell endpoints are a k / (b n).
  long double lo = 0.0L, hi = 0.0L;
  long double prev = 0.0L;
  const long double h = static_cast<long double>(a) / (static_cast<long double>(b) * n);
  for (std::int64_t k = 1; k <= n; ++k) {
    const long double f = cdf_rational(p, a * k, b * n, 80);
    lo += prev * h;
    hi += f * h;
    prev = f;
  }
  return {lo, hi};
}

/// Draws X by composing random contractions x -> x/3 (probability 1/(p+1)) and
/// x -> 1 - x/3 (probability p/(p+1)) 40 levels deep.
class Sampler {
 public:
  Sampler(double p, std::uint64_t seed) : coin_(1.0 / (p + 1.0)), rng_(seed) {}

  double operator()() {
    bool left[40];
    for (bool& b : left) b = coin_(rng_);
    double x = 0.5;
    for (int k = 39; k >= 0; --k) x = left[k] ? x / 3.0 : 1.0 - x / 3.0;
    return x;
  }

 private:
  std::bernoulli_distribution coin_;
  std::mt19937 rng_;
};

}  // namespace oracle
