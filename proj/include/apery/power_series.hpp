#ifndef APERY_POWER_SERIES_HPP
#define APERY_POWER_SERIES_HPP

#include <vector>

#include "apery/rational.hpp"

namespace apery {

/// Truncated formal power series over Rat with explicit precision: the
/// coefficients of q^0..q^N are stored and anything beyond q^N is unknown
/// (not zero). Arithmetic propagates precision pessimistically — a result
/// never claims more precision than its inputs support.
class PSeries {
public:
  /// Zero series known through q^precision.
  explicit PSeries(long precision);
  /// Takes coefficients for q^0..; pads with zeros or truncates to
  /// precision+1 entries.
  PSeries(std::vector<Rat> coeffs, long precision);
  static PSeries constant(const Rat& c, long precision);

  long precision() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; throws beyond the precision (it is unknown).
  const Rat& coeff(long i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Index of the first nonzero known coefficient; precision+1 if all known
  /// coefficients vanish.
  long valuation_lower_bound() const;

  PSeries operator-() const;
  friend PSeries operator+(const PSeries& a, const PSeries& b);
  friend PSeries operator-(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const Rat& s, const PSeries& a);

  /// Multiplies by (1 - q^m) exactly (same precision). m >= 1.
  PSeries times_one_minus_qm(long m) const;
  /// Multiplies by q^v (v >= 0): known range extends to q^{N+v}.
  PSeries shift_up(long v) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  PSeries inverse() const;
  /// Integer power; negative e inverts first.
  PSeries pow(long e) const;
  /// Drops knowledge beyond q^new_precision (must not exceed current).
  PSeries truncated(long new_precision) const;

  /// Equality holds up to the common precision only, as befits truncated
  /// series; use coeffs() for structural comparison.
  friend bool operator==(const PSeries& a, const PSeries& b);
  friend bool operator!=(const PSeries& a, const PSeries& b) { return !(a == b); }

private:
  std::vector<Rat> coeffs_;  // exactly precision+1 entries
};

/// sum_k outer_coeffs[k] * inner^k truncated at q^order. Requires inner to
/// have zero constant term (valuation >= 1), so outer coefficients beyond
/// index `order` cannot contribute.
PSeries compose_series(const std::vector<Rat>& outer_coeffs, const PSeries& inner, long order);

}  // namespace apery

#endif
