#ifndef APERY_POLYNOMIAL_HPP
#define APERY_POLYNOMIAL_HPP

#include <vector>

#include "apery/rational.hpp"

namespace apery {

/// Dense univariate polynomial with exact rational coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient list and has degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  /// c * x^deg
  static Poly monomial(const Rat& c, long deg);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  Rat coeff(long i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  /// Exact division of every coefficient; throws on zero divisor.
  friend Poly operator/(const Poly& p, const Rat& s);

  /// Exact Horner evaluation.
  Rat operator()(const Rat& x) const;
  Rat operator()(std::int64_t x) const { return (*this)(Rat(x)); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// binom(x, j) expanded to monomial coefficients: x(x-1)...(x-j+1) / j!.
Poly binom_poly(long j);

}  // namespace apery

#endif
