#include "apery/apery_numbers.hpp"

#include <stdexcept>

#include "apery/combinatorics.hpp"
#include "apery/hypergeometric.hpp"

namespace apery {

namespace {

void require_odd_prime(long p, const char* where) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument(std::string(where) + ": requires an odd prime");
}

}  // namespace

Rat j2_by_sum(long n) {
  if (n < 0) throw std::invalid_argument("j2_by_sum: negative n");
  // Incremental updates: c = binom(-1/2,k), b = binom(n,k), sign alternates.
  Rat acc(0);
  Rat c(1);      // binom(-1/2, k)
  Rat b(1);      // binom(n, k)
  int sign = 1;
  for (long k = 0; k <= n; ++k) {
    acc = acc + Rat(sign) * c * c * b;
    c = c * (Rat(-1, 2) - Rat(k)) / Rat(k + 1);
    b = b * Rat(n - k) / Rat(k + 1);
    sign = -sign;
  }
  return acc;
}

AperySeq j2_by_recurrence(long N) {
  if (N < 0) throw std::invalid_argument("j2_by_recurrence: negative N");
  AperySeq seq;
  seq.method = J2Method::recurrence;
  seq.values.reserve(static_cast<std::size_t>(N) + 1);
  seq.values.emplace_back(1);
  if (N >= 1) seq.values.emplace_back(3, 4);
  for (long n = 2; n <= N; ++n) {
    const Rat& a = seq.values[static_cast<std::size_t>(n - 1)];
    const Rat& b = seq.values[static_cast<std::size_t>(n - 2)];
    Rat next = (Rat(8 * n * n - 8 * n + 3) * a - Rat(4 * (n - 1) * (n - 1)) * b) / Rat(4 * n * n);
    seq.values.push_back(next);
  }
  return seq;
}

Rat j2_by_3f2(long n) {
  if (n < 0) throw std::invalid_argument("j2_by_3f2: negative n");
  HypParams params;
  params.numerator = {Rat(1, 2), Rat(1, 2), Rat(-n)};
  params.denominator = {Rat(1), Rat(1)};
  return terminating_pfq(params);
}

Poly f_poly(long n) {
  if (n < 0) throw std::invalid_argument("f_poly: negative n");
  Poly f;
  Poly bx = Poly::constant(Rat(1));  // binom(x, j), built up incrementally
  for (long j = 0; j <= n; ++j) {
    Rat c = Rat(binomial(n, j)) * Rat(binomial(n + j, j));
    f += c * bx;
    bx = (bx * Poly({Rat(-j), Rat(1)})) / Rat(j + 1);
  }
  return f;
}

bool check_f_recursion(long n) {
  if (n < 1) throw std::invalid_argument("check_f_recursion: n must be >= 1");
  Poly lhs = Rat((n + 1) * (n + 1)) * f_poly(n + 1);
  Poly rhs = Rat(2 * n + 1) * (Poly({Rat(1), Rat(2)}) * f_poly(n)) + Rat(n * n) * f_poly(n - 1);
  return lhs == rhs;
}

Poly g_poly(long p) {
  require_odd_prime(p, "g_poly");
  Poly g;
  Poly bx = Poly::constant(Rat(1));
  Rat c(1);  // binom(-1/2, j)
  int sign = 1;
  for (long j = 0; j <= p - 1; ++j) {
    g += (Rat(sign) * c * c) * bx;
    bx = (bx * Poly({Rat(-j), Rat(1)})) / Rat(j + 1);
    c = c * (Rat(-1, 2) - Rat(j)) / Rat(j + 1);
    sign = -sign;
  }
  return g;
}

Poly h_poly(long p) {
  require_odd_prime(p, "h_poly");
  Poly h = (g_poly(p) - f_poly((p - 1) / 2)) / Rat(p * p);
  if (!h.coeff(0).is_zero()) throw std::runtime_error("h not in xZ_p[x]");
  for (long i = 1; i <= h.degree(); ++i)
    if (vp(h.coeff(i), p) < PadicVal::of(0)) throw std::runtime_error("h not in xZ_p[x]");
  return h;
}

Rat I_sum(const Poly& f, long p) {
  require_odd_prime(p, "I_sum");
  Rat acc(0);
  for (long x = 0; x <= p - 1; ++x) acc = acc + f(x);
  return acc;
}

std::pair<Rat, Rat> I_f_binom(long m, long j, long p) {
  if (m < 1) throw std::invalid_argument("I_f_binom: m must be >= 1");
  if (j < 0) throw std::invalid_argument("I_f_binom: negative j");
  require_odd_prime(p, "I_f_binom");
  Rat direct = I_sum(f_poly(m) * binom_poly(j), p);
  Rat closed(0);
  for (long k = 0; k <= m; ++k) {
    Rat term = Rat(binomial(m, k) * binomial(m + k, k));
    if (k % 2 == 1) term = -term;
    term = term * pochhammer(Rat(p - j), j + k + 1);
    term = term / (Rat(factorial(j)) * Rat(factorial(k)) * Rat(j + k + 1));
    closed = closed + term;
  }
  if (m % 2 == 1) closed = -closed;
  return {direct, closed};
}

}  // namespace apery
