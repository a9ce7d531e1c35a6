#include "apery/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace apery {

PSeries::PSeries(long precision) {
  if (precision < 0) throw std::invalid_argument("PSeries: negative precision");
  coeffs_.assign(static_cast<std::size_t>(precision) + 1, Rat(0));
}

PSeries::PSeries(std::vector<Rat> coeffs, long precision) : coeffs_(std::move(coeffs)) {
  if (precision < 0) throw std::invalid_argument("PSeries: negative precision");
  coeffs_.resize(static_cast<std::size_t>(precision) + 1, Rat(0));
}

PSeries PSeries::constant(const Rat& c, long precision) {
  PSeries s(precision);
  s.coeffs_[0] = c;
  return s;
}

const Rat& PSeries::coeff(long i) const {
  if (i < 0 || i > precision())
    throw std::out_of_range("PSeries: coefficient beyond known precision");
  return coeffs_[static_cast<std::size_t>(i)];
}

long PSeries::valuation_lower_bound() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<long>(i);
  return precision() + 1;
}

PSeries PSeries::operator-() const {
  PSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PSeries operator+(const PSeries& a, const PSeries& b) {
  long n = std::min(a.precision(), b.precision());
  PSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
  return r;
}

PSeries operator-(const PSeries& a, const PSeries& b) {
  long n = std::min(a.precision(), b.precision());
  PSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
  return r;
}

PSeries operator*(const PSeries& a, const PSeries& b) {
  long n = std::min(a.precision(), b.precision());
  PSeries r(n);
  for (long i = 0; i <= n; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (long j = 0; i + j <= n; ++j)
      r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return r;
}

PSeries operator*(const Rat& s, const PSeries& a) {
  PSeries r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

PSeries PSeries::times_one_minus_qm(long m) const {
  if (m < 1) throw std::invalid_argument("times_one_minus_qm: m must be >= 1");
  PSeries r = *this;
  for (long i = precision(); i >= m; --i)
    r.coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(i - m)];
  return r;
}

PSeries PSeries::shift_up(long v) const {
  if (v < 0) throw std::invalid_argument("shift_up: negative shift");
  PSeries r(precision() + v);
  for (long i = 0; i <= precision(); ++i)
    r.coeffs_[static_cast<std::size_t>(i + v)] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

PSeries PSeries::inverse() const {
  if (coeffs_[0].is_zero())
    throw std::invalid_argument("PSeries inverse: constant term vanishes");
  PSeries r(precision());
  Rat u = coeffs_[0].inverse();
  r.coeffs_[0] = u;
  // b_n = -(1/a_0) * sum_{k=1}^{n} a_k b_{n-k}
  for (long n = 1; n <= precision(); ++n) {
    Rat acc(0);
    for (long k = 1; k <= n; ++k)
      acc += coeffs_[static_cast<std::size_t>(k)] * r.coeffs_[static_cast<std::size_t>(n - k)];
    r.coeffs_[static_cast<std::size_t>(n)] = -(u * acc);
  }
  return r;
}

PSeries PSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PSeries r = PSeries::constant(Rat(1), precision());
  PSeries base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

PSeries PSeries::truncated(long new_precision) const {
  if (new_precision < 0 || new_precision > precision())
    throw std::invalid_argument("truncated: precision out of range");
  std::vector<Rat> c(coeffs_.begin(), coeffs_.begin() + new_precision + 1);
  return PSeries(std::move(c), new_precision);
}

bool operator==(const PSeries& a, const PSeries& b) {
  long n = std::min(a.precision(), b.precision());
  for (long i = 0; i <= n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

PSeries compose_series(const std::vector<Rat>& outer_coeffs, const PSeries& inner, long order) {
  if (order < 0) throw std::invalid_argument("compose_series: negative order");
  if (!inner.coeff(0).is_zero())
    throw std::invalid_argument("composition needs valuation >= 1");
  long n = std::min(order, inner.precision());
  PSeries in = inner.truncated(n);
  // Horner from the top index that can contribute: inner^k = O(q^k).
  long top = std::min<long>(n, static_cast<long>(outer_coeffs.size()) - 1);
  PSeries r = PSeries::constant(top >= 0 ? outer_coeffs[static_cast<std::size_t>(top)] : Rat(0), n);
  for (long k = top - 1; k >= 0; --k)
    r = r * in + PSeries::constant(outer_coeffs[static_cast<std::size_t>(k)], n);
  return r;
}

}  // namespace apery
