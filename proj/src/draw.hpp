#pragma once

#include <cstdint>
#include <random>

#include "linkalg/polynomial.hpp"

namespace linkalg::detail {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : rng_() % k; }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Monomial monomial(std::size_t n, unsigned deg) {
    Monomial m(n);
    for (unsigned k = 0; k < deg; ++k) m[below(n)] += 1;
    return m;
  }

  /// Nonempty random subset of n variables as a bit mask.
  std::uint64_t subset(std::size_t n) {
    std::uint64_t mask = 0;
    while (mask == 0) mask = below(std::uint64_t{1} << n);
    return mask;
  }

  /// Monomial, variable sum, or homogeneous binomial.
  Polynomial element(const RingPtr& R, unsigned maxdeg) {
    const std::size_t n = R->nvars();
    const unsigned deg = 1 + static_cast<unsigned>(below(maxdeg));
    switch (below(4)) {
      case 0:
      case 1: return Polynomial::monomial(R, monomial(n, deg));
      case 2: {
        Polynomial f(R);
        std::uint64_t mask = subset(n);
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1u) f = f + Polynomial::variable(R, i);
        return f;
      }
      default: {
        Monomial a = monomial(n, deg), b = monomial(n, deg);
        if (a == b) return Polynomial::monomial(R, a);
        Rational sign = below(2) ? 1 : -1;
        return Polynomial::monomial(R, a) + Polynomial::monomial(R, b, sign);
      }
    }
  }

  /// Linear form with coefficients in 1..9 on every variable.
  Polynomial linear_form(const RingPtr& R) {
    Polynomial f(R);
    for (std::size_t i = 0; i < R->nvars(); ++i)
      f = f + Polynomial::monomial(R, Monomial::variable(R->nvars(), i), Rational(static_cast<long>(between(1, 9))));
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

/// splitmix64 finalizer, used to derive per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace linkalg::detail
