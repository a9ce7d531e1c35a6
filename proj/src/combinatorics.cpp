#include "apery/combinatorics.hpp"

#include <stdexcept>

namespace apery {

mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rat binom_rat(const Rat& a, long k) {
  if (k < 0) throw std::domain_error("binom_rat: k must be >= 0");
  Rat prod(1);
  for (long i = 0; i < k; ++i) prod *= a - Rat(i);
  return prod / Rat(factorial(k));
}

Rat pochhammer(const Rat& a, long k) {
  if (k < 0) throw std::domain_error("pochhammer: k must be >= 0");
  Rat prod(1);
  for (long i = 0; i < k; ++i) prod *= a + Rat(i);
  return prod;
}

Rat harmonic(long k) {
  if (k < 0) throw std::domain_error("harmonic: k must be >= 0");
  Rat h(0);
  for (long i = 1; i <= k; ++i) h += Rat(1, i);
  return h;
}

Rat harmonic2(long k) {
  if (k < 0) throw std::domain_error("harmonic2: k must be >= 0");
  Rat h(0);
  for (long i = 1; i <= k; ++i) h += Rat(1, i * i);
  return h;
}

}  // namespace apery
