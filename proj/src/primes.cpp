#include "rtva/primes.hpp"

namespace rtva {

std::vector<long> first_primes(int n) {
  std::vector<long> ps;
  long candidate = 2;
  while (static_cast<int>(ps.size()) < n) {
    bool prime = true;
    for (long p : ps) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(candidate);
    ++candidate;
  }
  return ps;
}

std::map<long, int> factorize(const mpz_class& n) {
  if (n == 0) throw DomainError("factorization of zero");
  mpz_class m = abs(n);
  std::map<long, int> factors;
  mpz_class p = 2;
  while (p * p <= m) {
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      ++factors[p.get_si()];
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    }
    ++p;
  }
  if (m > 1) {
    if (!m.fits_slong_p()) throw DomainError("prime factor too large");
    ++factors[m.get_si()];
  }
  return factors;
}

}  // namespace rtva
