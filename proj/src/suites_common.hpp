#pragma once

#include <random>

#include "starq/multivector.hpp"
#include "starq/suites.hpp"

namespace starq::detail {

inline Rational random_rational(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  long n = num(rng);
  if (!allow_zero && n == 0) n = 1;
  return make_rational(n, den(rng));
}

// Entries are rational multiples of h^2 = hbar/2, the physical dimension of
// the generator pairings.
inline BilinearFormX random_form(std::mt19937_64& rng, int d) {
  BilinearFormX B = BilinearFormX::zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      B.set(i, j, ExactScalar(random_rational(rng)) * ExactScalar::h(2));
  return B;
}

inline BilinearFormX random_form_invertible_g(std::mt19937_64& rng, int d) {
  BilinearFormX B = random_form(rng, d);
  for (int i = 0; i < d; ++i)
    B.set(i, i, B(i, i) + ExactScalar::rational(20) * ExactScalar::h(2));
  return B;
}

inline std::uint32_t random_mask(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << d) - 1u);
  return dist(rng);
}

inline MultivectorX random_monomial(std::mt19937_64& rng, int d) {
  return MultivectorX::blade(d, random_mask(rng, d), ExactScalar(random_rational(rng, false)));
}

inline MultivectorX random_multivector(std::mt19937_64& rng, int d, int nterms = 3) {
  MultivectorX out(d);
  for (int k = 0; k < nterms; ++k)
    out += MultivectorX::blade(d, random_mask(rng, d), ExactScalar(random_rational(rng)));
  return out;
}

// Residual magnitude of an exact multivector, promoted at hbar = c = 1.
inline double residual_norm(const MultivectorX& mv) { return mv.norm_inf(1.0, 1.0); }

}  // namespace starq::detail
