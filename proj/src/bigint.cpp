#include "mdperm/bigint.hpp"

#include "mdperm/errors.hpp"

namespace mdperm {

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int arrangement(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  Int out = 1;
  for (long i = m - k + 1; i <= m; ++i) out *= i;
  return out;
}

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw Error("non-exact division: " + a.get_str() + " / " + b.get_str());
  return q;
}

} // namespace mdperm
