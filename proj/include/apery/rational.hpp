#ifndef APERY_RATIONAL_HPP
#define APERY_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace apery {

/// Exact rational scalar backed by GMP. Always in lowest terms with a
/// positive denominator, so equality is structural and values can be used
/// directly as map keys or frozen test expectations.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(static_cast<signed long>(n)) {}
  Rat(std::int64_t num, std::int64_t den);
  Rat(const mpz_class& n) : q_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);
  /// Parses "num" or "num/den" in base 10.
  explicit Rat(const std::string& s);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  /// Exact conversion to a machine integer; throws unless integral and in range.
  std::int64_t to_int() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  /// Multiplicative inverse; throws on zero.
  Rat inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rat pow(long e) const;

  /// Canonical "num" / "num/den" form (what Rat(std::string) parses).
  std::string str() const { return q_.get_str(); }

private:
  mpq_class q_;
};

Rat abs(const Rat& r);
std::ostream& operator<<(std::ostream& os, const Rat& r);

/// A p-adic valuation: an integer or +infinity (the valuation of zero).
class PadicVal {
public:
  static PadicVal infinity() { return PadicVal(true, 0); }
  static PadicVal of(std::int64_t v) { return PadicVal(false, v); }

  bool is_infinite() const { return inf_; }
  /// Finite value; throws when infinite.
  std::int64_t value() const;

  friend bool operator==(const PadicVal& a, const PadicVal& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const PadicVal& a, const PadicVal& b) { return !(a == b); }
  friend bool operator<(const PadicVal& a, const PadicVal& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const PadicVal& a, const PadicVal& b) { return !(b < a); }
  friend bool operator>(const PadicVal& a, const PadicVal& b) { return b < a; }
  friend bool operator>=(const PadicVal& a, const PadicVal& b) { return !(a < b); }

  // v(ab) = v(a) + v(b), with infinity absorbing.
  friend PadicVal operator+(const PadicVal& a, const PadicVal& b) {
    if (a.inf_ || b.inf_) return infinity();
    return of(a.v_ + b.v_);
  }

  std::string str() const;

private:
  PadicVal(bool inf, std::int64_t v) : inf_(inf), v_(v) {}
  bool inf_;
  std::int64_t v_;
};

PadicVal min(const PadicVal& a, const PadicVal& b);
std::ostream& operator<<(std::ostream& os, const PadicVal& v);

/// Deterministic primality for the full 64-bit range (Miller-Rabin with a
/// fixed base set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending. Requires lo <= hi.
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

/// v_p(r) = v_p(num) - v_p(den); +infinity for r = 0. Throws unless p is prime.
PadicVal vp(const Rat& r, std::int64_t p);

/// Outcome of one congruence check a = b (mod p^m) over exact rationals.
/// For rational operands the congruence means v_p(a - b) >= m; operands may
/// individually have p in a denominator, only the difference matters.
/// `exponent` is the target m, or +infinity for exact-equality checks, so
/// holds <=> diff_valuation >= exponent in both flavors.
struct CongruenceVerdict {
  Rat lhs;
  Rat rhs;
  std::int64_t prime = 2;
  PadicVal exponent = PadicVal::of(1);
  PadicVal diff_valuation = PadicVal::infinity();
  bool holds = false;

  friend bool operator==(const CongruenceVerdict& a, const CongruenceVerdict& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.prime == b.prime &&
           a.exponent == b.exponent && a.diff_valuation == b.diff_valuation &&
           a.holds == b.holds;
  }
};

/// Checks a = b (mod p^m). Throws unless p is prime and m >= 1. A negative
/// valuation of the difference is a failed verdict, not an error.
CongruenceVerdict congruent(const Rat& a, const Rat& b, std::int64_t p, std::int64_t m);

/// Exact-equality verdict (congruence "mod p^inf"); the prime slot is an
/// uninformative 2 and the recorded valuation is v_2 of the difference.
CongruenceVerdict exactly_equal(const Rat& a, const Rat& b);

}  // namespace apery

#endif
