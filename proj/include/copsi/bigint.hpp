#ifndef COPSI_BIGINT_HPP
#define COPSI_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace copsi {

// Exact unbounded integer; every count in this library is one of these.
using BigInt = mpz_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace copsi

#endif  // COPSI_BIGINT_HPP
