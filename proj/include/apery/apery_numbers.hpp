#ifndef APERY_APERY_NUMBERS_HPP
#define APERY_APERY_NUMBERS_HPP

#include <utility>
#include <vector>

#include "apery/polynomial.hpp"
#include "apery/rational.hpp"

namespace apery {

enum class J2Method { sum, recurrence, hypergeometric };

/// Prefix J(0..N) of the Apery-like sequence, tagged with how it was produced.
struct AperySeq {
  std::vector<Rat> values;
  J2Method method = J2Method::sum;
};

/// J(n) = sum_{k=0}^{n} (-1)^k binom(-1/2,k)^2 binom(n,k).
Rat j2_by_sum(long n);

/// Whole prefix 0..N from the three-term recurrence
/// 4n^2 J(n) = (8n^2-8n+3) J(n-1) - 4(n-1)^2 J(n-2), seeded J(0)=1, J(1)=3/4.
AperySeq j2_by_recurrence(long N);

/// J(n) = 3F2(1/2, 1/2, -n; 1, 1; 1).
Rat j2_by_3f2(long n);

/// f_n(x) = sum_{j=0}^{n} binom(n,j) binom(n+j,j) binom(x,j); degree exactly n.
Poly f_poly(long n);

/// (n+1)^2 f_{n+1}(x) = (2n+1)(2x+1) f_n(x) + n^2 f_{n-1}(x), checked
/// coefficient-wise.  n >= 1.
bool check_f_recursion(long n);

/// g(x) = sum_{j=0}^{p-1} (-1)^j binom(-1/2,j)^2 binom(x,j); degree p-1.
Poly g_poly(long p);

/// h(x) = (g(x) - f_{(p-1)/2}(x)) / p^2, with membership in x Z_p[x] verified:
/// zero constant term and every coefficient p-integral.  Violation throws,
/// since that would signal a kernel defect rather than a data condition.
Poly h_poly(long p);

/// I(f) = sum_{x=0}^{p-1} f(x).
Rat I_sum(const Poly& f, long p);

/// Both sides of the closed form for I(f_m(x) binom(x,j)):
/// first = direct summed value, second = the alternating Pochhammer form
/// (-1)^m sum_k binom(m,k) binom(m+k,k) (-1)^k (p-j)_{j+k+1} / (j! k! (j+k+1)).
std::pair<Rat, Rat> I_f_binom(long m, long j, long p);

}  // namespace apery

#endif
