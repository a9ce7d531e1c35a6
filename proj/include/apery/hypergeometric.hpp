#ifndef APERY_HYPERGEOMETRIC_HPP
#define APERY_HYPERGEOMETRIC_HPP

#include <optional>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

/// Parameters of a generalized hypergeometric series pFq evaluated at a
/// rational argument. Evaluation is exact and restricted to terminating or
/// explicitly truncated sums, which is why z = 1 is fine here.
struct HypParams {
  std::vector<Rat> numerator;
  std::vector<Rat> denominator;
  Rat argument = Rat(1);
};

/// Smallest N >= 0 such that some numerator parameter equals -N, if any.
std::optional<long> termination_index(const HypParams& params);

/// Exact value of a terminating series: sum over k = 0..N where N is the
/// termination index. Throws "non-terminating" when no numerator parameter
/// is a nonpositive integer, and "parameter pole" when a denominator
/// parameter hits a nonpositive integer before the series has terminated.
/// Denominator poles past the termination index are tolerated.
Rat terminating_pfq(const HypParams& params);

/// Partial sum over k = 0..upper inclusive (upper >= 0). Poles below `upper`
/// are an error unless the series has already terminated.
Rat truncated_pfq(const HypParams& params, long upper);

/// 3F2(-m,a,b;d,e;1) = (e-a)_m/(e)_m * 3F2(-m,a,d-b;d,a+1-m-e;1), m >= 1.
/// Returns whether both exact evaluations agree; evaluation poles throw.
bool check_transform_357(long m, const Rat& a, const Rat& b, const Rat& d, const Rat& e);

/// Pfaff-Saalschutz: 3F2(-n,a,b;c,1+a+b-c-n;1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
/// Returns whether both exact evaluations agree; zero denominators throw.
bool check_pfaff_saalschutz(long n, const Rat& a, const Rat& b, const Rat& c);

}  // namespace apery

#endif
