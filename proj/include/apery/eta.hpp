#ifndef APERY_ETA_HPP
#define APERY_ETA_HPP

#include <vector>

#include "apery/power_series.hpp"

namespace apery {

/// A formal product of Dedekind eta factors eta(scale*z)^exponent, where
/// eta(cz) = q^{c/24} prod_{n>=1} (1 - q^{cn}).  The q-expansion is a power
/// series only when the total fractional power sum(scale*exponent)/24 is a
/// nonnegative integer.
struct EtaQuotient {
  struct Factor {
    long scale;     // positive
    long exponent;  // any sign
  };
  std::vector<Factor> factors;

  /// sum(scale * exponent); must be divisible by 24 for a q-series.
  long weight24() const;
};

/// q-expansion of the quotient through q^order. Throws invalid_argument
/// "fractional power" when 24 does not divide weight24(), and "pole at q=0"
/// when the net power shift is negative.
PSeries eta_quotient_series(const EtaQuotient& eq, long order);

/// t(z) = 16 eta(z)^8 eta(4z)^16 / eta(2z)^24 = 16q + O(q^2).
PSeries t_series(long order);

/// Left side of the modular parametrization:
/// eta(2z)^22 / (eta(z)^12 eta(4z)^8) = 1 + 12q + 68q^2 + ...
PSeries parametrization_lhs(long order);

/// True iff parametrization_lhs(order) equals sum_n J(n) t^n through q^order.
bool verify_parametrization(long order);

}  // namespace apery

#endif
