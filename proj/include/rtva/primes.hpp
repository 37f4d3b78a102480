#pragma once

#include <map>
#include <vector>

#include "rtva/rational.hpp"

namespace rtva {

/// The first n primes, ascending.
std::vector<long> first_primes(int n);

/// Prime factorization of |n| as prime -> exponent (empty for |n| = 1).
/// Throws DomainError for n = 0.
std::map<long, int> factorize(const mpz_class& n);

}  // namespace rtva
