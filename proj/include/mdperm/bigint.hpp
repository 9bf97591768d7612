#pragma once

#include <gmpxx.h>

namespace mdperm {

// Exact arithmetic everywhere: counts overflow 64 bits already at desk scale
// (e.g. (n!)^3 for n = 11).
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int int_pow(const Int& base, unsigned long exp);

/// Arrangement number m!/(m-k)!, defined as 0 outside 0 <= k <= m.
Int arrangement(long m, long k);

/// Quotient a/b with the division checked to be exact; throws on a remainder.
Int exact_div(const Int& a, const Int& b);

} // namespace mdperm
