#include "apery/polynomial.hpp"

#include <stdexcept>
#include <utility>

#include "apery/combinatorics.hpp"

namespace apery {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, long deg) {
  if (deg < 0) throw std::invalid_argument("monomial: negative degree");
  if (c.is_zero()) return Poly();
  std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

Rat Poly::coeff(long i) const {
  if (i < 0) throw std::invalid_argument("coeff: negative index");
  if (i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  std::vector<Rat> c(p.coeffs_);
  for (auto& x : c) x = s * x;
  return Poly(std::move(c));
}

Poly operator/(const Poly& p, const Rat& s) {
  if (s.is_zero()) throw std::invalid_argument("Poly: division by zero");
  return s.inverse() * p;
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly binom_poly(long j) {
  if (j < 0) throw std::invalid_argument("binom_poly: negative j");
  // binom(x, j) = binom(x, j-1) * (x - (j-1)) / j
  Poly b = Poly::constant(Rat(1));
  for (long i = 1; i <= j; ++i) {
    Poly lin({Rat(-(i - 1)), Rat(1)});  // x - (i-1)
    b = (b * lin) / Rat(i);
  }
  return b;
}

}  // namespace apery
