#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rtva/machine.hpp"

namespace rtva {

/// A machine from the collection, paired with an independent brute-force
/// membership oracle over the same alphabet. Oracles use plain integer and
/// string logic only — never the exact-arithmetic simulators they certify.
/// fidelity_notes documents any deviation from the source construction and a
/// concrete witness word where the literal version disagrees with the oracle.
struct ZooEntry {
  std::string id;
  std::string description;
  AnyMachine machine;
  Rational tufa_lambda = 1;  // cutpoint, generalized-automaton entries only
  std::function<bool(const Word&)> oracle;
  std::vector<Symbol> alphabet;
  std::string fidelity_notes;
};

ZooEntry build_ufibonacci(bool fidelity = false);
ZooEntry build_ugauss_dva2();
ZooEntry build_ugauss_2ca();
ZooEntry build_ugauss_2ca_simzero();
ZooEntry build_lng(int k);
ZooEntry build_geqstar_dva2(bool fidelity = false);
ZooEntry build_geqstar_fam();
ZooEntry build_mpal_dbva2();
ZooEntry build_mod_tufa(int k);
ZooEntry build_subsetsum_nbva3(bool fidelity = false);
ZooEntry build_pow_nbva2();
ZooEntry build_eqcount_famw();

/// Canonical ids of the shipped entries.
std::vector<std::string> zoo_ids();

/// Looks an entry up by id ("lng-<k>" and "mod<k>-tufa" take any parameter);
/// throws InputError for unknown ids.
ZooEntry zoo_get(const std::string& id, bool fidelity = false);

// Arithmetic membership predicates behind the oracles, reusable in tests.
bool is_fibonacci(unsigned long n);        // {1, 2, 3, 5, 8, ...}
bool is_gauss_number(unsigned long n);     // n = m^2 + m
bool is_pow_number(unsigned long n);       // n = k + 2^k, k >= 1
bool geq_star_member(const Word& w);       // blocks a^m b^n with m >= n >= 1
bool subset_sum_member(const Word& w);     // t#a1#...#an#, some subset sums to t

}  // namespace rtva
