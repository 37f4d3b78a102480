#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rtva/machine.hpp"
#include "rtva/run.hpp"

namespace rtva {

/// Deterministic, platform-independent generator (identical sequences for a
/// given seed everywhere; statistical quality is ample for word sampling).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : x_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)

 private:
  std::uint64_t x_;
};

/// All words of length 0..max_len in length-then-lexicographic order, with
/// symbols ordered as in the alphabet.
class WordEnumerator {
 public:
  WordEnumerator(std::vector<Symbol> alphabet, std::size_t max_len);
  std::optional<Word> next();

  /// sum over i <= max_len of |alphabet|^i.
  static std::uint64_t count(std::size_t alphabet_size, std::size_t max_len);

 private:
  std::vector<Symbol> alphabet_;
  std::size_t max_len_;
  std::size_t len_ = 0;
  std::vector<std::size_t> digits_;
  bool done_ = false;
  bool fresh_length_ = true;
};

/// Seeded sampler: uniform length in [0, max_len], then uniform symbols.
class WordSampler {
 public:
  WordSampler(std::vector<Symbol> alphabet, std::size_t max_len,
              std::uint64_t seed);
  Word next();

 private:
  std::vector<Symbol> alphabet_;
  std::size_t max_len_;
  SplitMix64 rng_;
};

/// A machine bundled with everything needed to ask it for verdicts.
struct RunnableMachine {
  AnyMachine machine;
  Rational tufa_lambda = 1;
  RunLimits limits;
  std::string label = "machine";

  Verdict verdict(const Word& w) const;
};

/// One run with the statistics probes care about: the verdict, the largest
/// frontier, and the bit size after each executed step.
struct RunStats {
  Verdict verdict = Verdict::Reject;
  std::size_t max_frontier = 1;
  std::vector<std::size_t> step_bits;
};

RunStats run_with_stats(const RunnableMachine& m, const Word& w);

struct TestReport {
  std::string subject;
  std::string reference;
  std::string word_source;
  std::uint64_t words_tested = 0;
  std::optional<Word> counterexample;
  std::string counterexample_note;
  std::size_t max_frontier = 0;
  std::size_t max_bits = 0;

  bool clean() const { return !counterexample.has_value(); }
};

using Oracle = std::function<bool(const Word&)>;

/// Compares machine verdicts against the oracle on every enumerated word,
/// stopping at the first disagreement. Resource errors propagate with the
/// offending word attached.
TestReport differential_test(const RunnableMachine& m, const Oracle& oracle,
                             const std::vector<Symbol>& alphabet,
                             std::size_t max_len);
TestReport differential_test_sampled(const RunnableMachine& m,
                                     const Oracle& oracle,
                                     const std::vector<Symbol>& alphabet,
                                     std::size_t max_len, std::uint64_t count,
                                     std::uint64_t seed);
TestReport differential_test_words(const RunnableMachine& m,
                                   const Oracle& oracle,
                                   const std::vector<Word>& words,
                                   const std::string& source_desc);

/// Verdict agreement of two machines on every enumerated word; symmetric.
TestReport equivalence_test(const RunnableMachine& a, const RunnableMachine& b,
                            const std::vector<Symbol>& alphabet,
                            std::size_t max_len);
TestReport equivalence_test_words(const RunnableMachine& a,
                                  const RunnableMachine& b,
                                  const std::vector<Word>& words,
                                  const std::string& source_desc);

/// Linear bit-growth constants for a machine: observed sizes must satisfy
/// bits(step i) <= b0 + (i+1) * bmax, hence <= b0 + (|w|+2) * bmax for
/// real-time runs.
struct BitConstants {
  std::size_t b0 = 1;
  std::size_t bmax = 1;
};

BitConstants machine_bit_constants(const AnyMachine& m);

struct BitGrowthReport {
  BitConstants constants;
  std::uint64_t words_tested = 0;
  std::size_t max_bits_seen = 0;
  std::optional<Word> violation;
  std::size_t violation_step = 0;

  bool clean() const { return !violation.has_value(); }
};

/// Replays the machine on every word and checks the per-step bit bound.
BitGrowthReport bitgrowth_probe(const RunnableMachine& m,
                                const std::vector<Word>& words);

struct SyncReport {
  std::uint64_t words_tested = 0;
  std::optional<Word> violation;
  std::size_t violation_step = 0;
  std::string note;

  bool clean() const { return !violation.has_value(); }
};

/// For step-synchronous pairs produced by the prime-encoding transforms:
/// asserts vector value == prod primes[i]^counters[i] after every step of
/// every run.
SyncReport step_sync_probe(const VectorAutomaton& va, const CounterMachine& cm,
                           const std::vector<long>& primes,
                           const std::vector<Word>& words);

/// Well-formed random subset-sum words t#a1#...#an# with n in [1,6] and
/// values below 256; roughly half use a realizable target.
std::vector<Word> random_subset_sum_words(std::uint64_t count,
                                          std::uint64_t seed);

/// Materializes an enumeration (use only for desk-scale counts).
std::vector<Word> all_words(const std::vector<Symbol>& alphabet,
                            std::size_t max_len);

}  // namespace rtva
