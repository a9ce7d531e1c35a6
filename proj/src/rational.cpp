#include "apery/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace apery {

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(const std::string& s) {
  if (mpq_set_str(q_.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  if (q_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

std::int64_t Rat::to_int() const {
  if (!is_integer()) throw std::domain_error("Rat: not an integer: " + str());
  mpz_class n = q_.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("Rat: integer out of 64-bit range");
  return n.get_si();
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den(), num());
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  const Rat base = e < 0 ? inverse() : *this;
  const unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  return Rat(n, d);
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t PadicVal::value() const {
  if (inf_) throw std::domain_error("PadicVal: infinite valuation has no value");
  return v_;
}

std::string PadicVal::str() const { return inf_ ? "inf" : std::to_string(v_); }

PadicVal min(const PadicVal& a, const PadicVal& b) { return a < b ? a : b; }

std::ostream& operator<<(std::ostream& os, const PadicVal& v) { return os << v.str(); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // exact for n < 2^64 with this base set
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
    if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(n);
  return out;
}

PadicVal vp(const Rat& r, std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("vp: p must be prime");
  if (r.is_zero()) return PadicVal::infinity();
  const mpz_class pz(static_cast<long>(p));
  mpz_class tmp;
  mp_bitcnt_t vn = mpz_remove(tmp.get_mpz_t(), r.num().get_mpz_t(), pz.get_mpz_t());
  mp_bitcnt_t vd = mpz_remove(tmp.get_mpz_t(), r.den().get_mpz_t(), pz.get_mpz_t());
  return PadicVal::of(static_cast<std::int64_t>(vn) - static_cast<std::int64_t>(vd));
}

CongruenceVerdict congruent(const Rat& a, const Rat& b, std::int64_t p, std::int64_t m) {
  if (m < 1) throw std::domain_error("congruent: exponent must be >= 1");
  CongruenceVerdict v;
  v.lhs = a;
  v.rhs = b;
  v.prime = p;
  v.exponent = PadicVal::of(m);
  v.diff_valuation = vp(a - b, p);  // validates p
  v.holds = v.diff_valuation >= v.exponent;
  return v;
}

CongruenceVerdict exactly_equal(const Rat& a, const Rat& b) {
  CongruenceVerdict v;
  v.lhs = a;
  v.rhs = b;
  v.prime = 2;
  v.exponent = PadicVal::infinity();
  v.diff_valuation = vp(a - b, 2);
  v.holds = v.diff_valuation >= v.exponent;
  return v;
}

}  // namespace apery
