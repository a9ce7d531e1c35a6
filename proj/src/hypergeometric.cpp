#include "apery/hypergeometric.hpp"

#include <stdexcept>

#include "apery/combinatorics.hpp"

namespace apery {

std::optional<long> termination_index(const HypParams& params) {
  std::optional<long> best;
  for (const Rat& a : params.numerator) {
    if (!a.is_integer() || a.sign() > 0) continue;
    const long n = (-a).to_int();
    if (!best || n < *best) best = n;
  }
  return best;
}

namespace {

// Sum over k = 0..upper with the term updated by its ratio
//   term_{k+1} = term_k * prod(alpha_i + k) / prod(beta_j + k) * z / (k+1).
// Once the running term is exactly zero every later term is zero too, so the
// sum is complete and denominator poles past that point are irrelevant.
Rat sum_terms(const HypParams& params, long upper) {
  Rat acc(1);
  Rat term(1);
  for (long k = 0; k < upper; ++k) {
    if (term.is_zero()) return acc;
    Rat next = term * params.argument / Rat(k + 1);
    for (const Rat& a : params.numerator) next *= a + Rat(k);
    for (const Rat& b : params.denominator) {
      const Rat factor = b + Rat(k);
      if (factor.is_zero()) throw std::domain_error("parameter pole");
      next /= factor;
    }
    term = next;
    acc += term;
  }
  return acc;
}

}  // namespace

Rat terminating_pfq(const HypParams& params) {
  const auto n = termination_index(params);
  if (!n) throw std::domain_error("non-terminating");
  return sum_terms(params, *n);
}

Rat truncated_pfq(const HypParams& params, long upper) {
  if (upper < 0) throw std::domain_error("truncated_pfq: upper must be >= 0");
  return sum_terms(params, upper);
}

bool check_transform_357(long m, const Rat& a, const Rat& b, const Rat& d, const Rat& e) {
  if (m < 1) throw std::domain_error("check_transform_357: m must be >= 1");
  const Rat lhs = terminating_pfq({{Rat(-m), a, b}, {d, e}});
  const Rat em = pochhammer(e, m);
  if (em.is_zero()) throw std::domain_error("parameter pole");
  const Rat prefactor = pochhammer(e - a, m) / em;
  const Rat rhs = prefactor * terminating_pfq({{Rat(-m), a, d - b}, {d, a + Rat(1 - m) - e}});
  return lhs == rhs;
}

bool check_pfaff_saalschutz(long n, const Rat& a, const Rat& b, const Rat& c) {
  if (n < 0) throw std::domain_error("check_pfaff_saalschutz: n must be >= 0");
  const Rat lhs = terminating_pfq({{Rat(-n), a, b}, {c, Rat(1) + a + b - c - Rat(n)}});
  const Rat den = pochhammer(c, n) * pochhammer(c - a - b, n);
  if (den.is_zero()) throw std::domain_error("parameter pole");
  const Rat rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den;
  return lhs == rhs;
}

}  // namespace apery
