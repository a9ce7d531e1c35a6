#ifndef APERY_COMBINATORICS_HPP
#define APERY_COMBINATORICS_HPP

#include "apery/rational.hpp"

namespace apery {

/// n! for n >= 0.
mpz_class factorial(long n);

/// Integer binomial coefficient; 0 for k < 0 or (n >= 0 and k > n).
/// Negative n follows the falling-factorial convention.
mpz_class binomial(long n, long k);

/// Generalized binomial binom(a, k) = a(a-1)...(a-k+1) / k!, k >= 0.
Rat binom_rat(const Rat& a, long k);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1. Requires k >= 0.
Rat pochhammer(const Rat& a, long k);

/// H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0. Requires k >= 0.
Rat harmonic(long k);

/// Second-order harmonic number: sum of 1/i^2 for i = 1..k. Requires k >= 0.
Rat harmonic2(long k);

}  // namespace apery

#endif
