#include "apery/eta.hpp"

#include <map>
#include <stdexcept>

#include "apery/apery_numbers.hpp"

namespace apery {

long EtaQuotient::weight24() const {
  long w = 0;
  for (const auto& f : factors) w += f.scale * f.exponent;
  return w;
}

namespace {

/// prod_{n=1}^{order/c} (1 - q^{cn}) at precision `order`.
PSeries euler_product(long c, long order) {
  PSeries p = PSeries::constant(Rat(1), order);
  for (long n = 1; c * n <= order; ++n) p = p.times_one_minus_qm(c * n);
  return p;
}

}  // namespace

PSeries eta_quotient_series(const EtaQuotient& eq, long order) {
  if (order < 1) throw std::invalid_argument("eta_quotient_series: order must be >= 1");
  for (const auto& f : eq.factors)
    if (f.scale < 1) throw std::invalid_argument("eta_quotient_series: scale must be positive");
  long w = eq.weight24();
  if (w % 24 != 0) throw std::invalid_argument("eta_quotient_series: fractional power");
  long v = w / 24;
  if (v < 0) throw std::invalid_argument("eta_quotient_series: pole at q=0");

  // Merge exponents per scale so each Euler product is expanded once.
  std::map<long, long> exponent_by_scale;
  for (const auto& f : eq.factors) exponent_by_scale[f.scale] += f.exponent;

  PSeries s = PSeries::constant(Rat(1), order);
  for (const auto& [scale, e] : exponent_by_scale) {
    if (e == 0) continue;
    s = s * euler_product(scale, order).pow(e);
  }
  return s.shift_up(v).truncated(order);
}

PSeries t_series(long order) {
  EtaQuotient eq{{{1, 8}, {4, 16}, {2, -24}}};
  return Rat(16) * eta_quotient_series(eq, order);
}

PSeries parametrization_lhs(long order) {
  EtaQuotient eq{{{2, 22}, {1, -12}, {4, -8}}};
  return eta_quotient_series(eq, order);
}

bool verify_parametrization(long order) {
  if (order < 1) throw std::invalid_argument("verify_parametrization: order must be >= 1");
  PSeries lhs = parametrization_lhs(order);
  PSeries rhs = compose_series(j2_by_recurrence(order).values, t_series(order), order);
  return lhs == rhs;
}

}  // namespace apery
