#include "rtva/diffcheck.hpp"

#include <algorithm>

#include "rtva/errors.hpp"

namespace rtva {
namespace {

std::string verdict_note(const std::string& a_label, Verdict a,
                         const std::string& b_label, Verdict b) {
  return a_label + "=" + verdict_str(a) + " " + b_label + "=" + verdict_str(b);
}

template <typename NextWord>
TestReport compare_stream(const RunnableMachine& m,
                          const std::function<Verdict(const Word&)>& reference,
                          const std::string& ref_label, NextWord&& next_word,
                          const std::string& source_desc) {
  TestReport report;
  report.subject = m.label;
  report.reference = ref_label;
  report.word_source = source_desc;
  while (true) {
    std::optional<Word> w = next_word();
    if (!w) break;
    Verdict want;
    RunStats stats;
    try {
      stats = run_with_stats(m, *w);
      want = reference(*w);
    } catch (const ResourceLimitError& e) {
      throw ResourceLimitError(std::string(e.what()) + " on word '" +
                                   word_str(*w) + "'",
                               e.step);
    }
    ++report.words_tested;
    report.max_frontier = std::max(report.max_frontier, stats.max_frontier);
    for (std::size_t b : stats.step_bits) {
      report.max_bits = std::max(report.max_bits, b);
    }
    if (stats.verdict != want) {
      report.counterexample = *w;
      report.counterexample_note =
          verdict_note(m.label, stats.verdict, ref_label, want);
      break;
    }
  }
  return report;
}

}  // namespace

RunStats run_with_stats(const RunnableMachine& m, const Word& w) {
  RunStats out;
  if (const auto* g = std::get_if<Tufa>(&m.machine)) {
    // Steps are the prefix products followed by the final fold.
    RowVector u = g->initial_vector;
    for (const auto& s : w) {
      int sid = g->symbol_id(s);
      if (sid < 0) {
        throw InputError("symbol '" + s + "' is not in the automaton alphabet");
      }
      u = u * g->matrices[sid];
      out.step_bits.push_back(u.max_bits());
    }
    Rational value = dot(u, g->final_vector);
    out.step_bits.push_back(value.bits());
    out.verdict =
        value == m.tufa_lambda ? Verdict::Accept : Verdict::Reject;
    return out;
  }
  RunTrace trace;
  if (const auto* va = std::get_if<VectorAutomaton>(&m.machine)) {
    trace = va->deterministic
                ? run_vector_automaton(*va, w)
                : run_vector_automaton_nondet(*va, w, m.limits.frontier_cap,
                                              m.limits.dedupe);
  } else if (const auto* cm = std::get_if<CounterMachine>(&m.machine)) {
    trace = run_counter_machine(*cm, w);
  } else {
    trace = run_multiply_automaton(std::get<MultiplyAutomaton>(m.machine), w,
                                   m.limits.step_budget);
  }
  out.verdict = trace.verdict;
  out.max_frontier = trace.max_frontier;
  out.step_bits.reserve(trace.steps.size());
  for (const auto& s : trace.steps) out.step_bits.push_back(s.max_bits);
  return out;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (x_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return n ? next() % n : 0; }

WordEnumerator::WordEnumerator(std::vector<Symbol> alphabet,
                               std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {
  if (alphabet_.empty()) max_len_ = 0;  // only the empty word exists
}

std::optional<Word> WordEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_length_) {
    fresh_length_ = false;
    digits_.assign(len_, 0);
  } else {
    // Odometer increment, most significant digit first.
    std::size_t i = len_;
    while (i > 0) {
      --i;
      if (++digits_[i] < alphabet_.size()) break;
      digits_[i] = 0;
      if (i == 0) {
        if (len_ == max_len_) {
          done_ = true;
          return std::nullopt;
        }
        ++len_;
        fresh_length_ = true;
        return next();
      }
    }
    if (len_ == 0) {
      if (max_len_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      ++len_;
      fresh_length_ = true;
      return next();
    }
  }
  Word w;
  w.reserve(len_);
  for (std::size_t d : digits_) w.push_back(alphabet_[d]);
  return w;
}

std::uint64_t WordEnumerator::count(std::size_t alphabet_size,
                                    std::size_t max_len) {
  std::uint64_t total = 0, pow = 1;
  for (std::size_t i = 0; i <= max_len; ++i) {
    total += pow;
    pow *= alphabet_size;
  }
  return total;
}

WordSampler::WordSampler(std::vector<Symbol> alphabet, std::size_t max_len,
                         std::uint64_t seed)
    : alphabet_(std::move(alphabet)), max_len_(max_len), rng_(seed) {}

Word WordSampler::next() {
  std::size_t len = static_cast<std::size_t>(rng_.below(max_len_ + 1));
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(alphabet_[rng_.below(alphabet_.size())]);
  }
  return w;
}

Verdict RunnableMachine::verdict(const Word& w) const {
  return machine_verdict(machine, tufa_lambda, w, limits);
}

TestReport differential_test(const RunnableMachine& m, const Oracle& oracle,
                             const std::vector<Symbol>& alphabet,
                             std::size_t max_len) {
  WordEnumerator en(alphabet, max_len);
  auto ref = [&oracle](const Word& w) {
    return oracle(w) ? Verdict::Accept : Verdict::Reject;
  };
  return compare_stream(
      m, ref, "oracle", [&en] { return en.next(); },
      "exhaustive up to length " + std::to_string(max_len));
}

TestReport differential_test_sampled(const RunnableMachine& m,
                                     const Oracle& oracle,
                                     const std::vector<Symbol>& alphabet,
                                     std::size_t max_len, std::uint64_t count,
                                     std::uint64_t seed) {
  WordSampler sampler(alphabet, max_len, seed);
  std::uint64_t left = count;
  auto ref = [&oracle](const Word& w) {
    return oracle(w) ? Verdict::Accept : Verdict::Reject;
  };
  return compare_stream(
      m, ref, "oracle",
      [&]() -> std::optional<Word> {
        if (left == 0) return std::nullopt;
        --left;
        return sampler.next();
      },
      std::to_string(count) + " samples, max length " +
          std::to_string(max_len) + ", seed " + std::to_string(seed));
}

TestReport differential_test_words(const RunnableMachine& m,
                                   const Oracle& oracle,
                                   const std::vector<Word>& words,
                                   const std::string& source_desc) {
  std::size_t i = 0;
  auto ref = [&oracle](const Word& w) {
    return oracle(w) ? Verdict::Accept : Verdict::Reject;
  };
  return compare_stream(
      m, ref, "oracle",
      [&]() -> std::optional<Word> {
        if (i == words.size()) return std::nullopt;
        return words[i++];
      },
      source_desc);
}

TestReport equivalence_test(const RunnableMachine& a, const RunnableMachine& b,
                            const std::vector<Symbol>& alphabet,
                            std::size_t max_len) {
  WordEnumerator en(alphabet, max_len);
  auto ref = [&b](const Word& w) { return b.verdict(w); };
  return compare_stream(
      a, ref, b.label, [&en] { return en.next(); },
      "exhaustive up to length " + std::to_string(max_len));
}

TestReport equivalence_test_words(const RunnableMachine& a,
                                  const RunnableMachine& b,
                                  const std::vector<Word>& words,
                                  const std::string& source_desc) {
  std::size_t i = 0;
  auto ref = [&b](const Word& w) { return b.verdict(w); };
  return compare_stream(
      a, ref, b.label,
      [&]() -> std::optional<Word> {
        if (i == words.size()) return std::nullopt;
        return words[i++];
      },
      source_desc);
}

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  std::size_t v = 1;
  while (v < n) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

// Growth constants from a set of matrices: one multiplication can multiply
// the common denominator by at most the lcm of all entry denominators and
// scale the value by at most k * (largest numerator).
BitConstants constants_from_matrices(const std::vector<const SquareMatrix*>& ms,
                                     const RowVector& v0, int k) {
  mpz_class lcm_den = 1;
  std::size_t num_max = 1;
  for (const SquareMatrix* m : ms) {
    for (int r = 0; r < m->dim(); ++r) {
      for (int c = 0; c < m->dim(); ++c) {
        const Rational& cell = m->at(r, c);
        if (cell.is_zero()) continue;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                cell.den().get_mpz_t());
        num_max = std::max(num_max, cell.num_bits());
      }
    }
  }
  mpz_class v0_den = 1;
  std::size_t v0_num = 1;
  for (int i = 0; i < v0.dim(); ++i) {
    mpz_lcm(v0_den.get_mpz_t(), v0_den.get_mpz_t(), v0[i].den().get_mpz_t());
    v0_num = std::max(v0_num, v0[i].num_bits());
  }
  BitConstants bc;
  bc.b0 = mpz_sizeinbase(v0_den.get_mpz_t(), 2) + v0_num + 1;
  bc.bmax = mpz_sizeinbase(lcm_den.get_mpz_t(), 2) + num_max +
            ceil_log2(static_cast<std::size_t>(k)) + 1;
  return bc;
}

}  // namespace

BitConstants machine_bit_constants(const AnyMachine& m) {
  if (const auto* va = std::get_if<VectorAutomaton>(&m)) {
    std::vector<const SquareMatrix*> ms;
    for (const auto& by_sym : va->arrows) {
      for (const auto& by_om : by_sym) {
        for (const auto& opts : by_om) {
          for (const auto& a : opts) ms.push_back(&a.matrix);
        }
      }
    }
    return constants_from_matrices(ms, va->initial_vector, va->dim);
  }
  if (const auto* cm = std::get_if<CounterMachine>(&m)) {
    BitConstants bc;
    bc.b0 = 1;
    bc.bmax = ceil_log2(static_cast<std::size_t>(cm->bound) + 1) + 1;
    return bc;
  }
  if (const auto* fa = std::get_if<MultiplyAutomaton>(&m)) {
    mpz_class lcm_den = 1;
    std::size_t num_max = 1;
    for (const auto& by_sym : fa->arrows) {
      for (const auto& by_om : by_sym) {
        for (const auto& a : by_om) {
          if (!a || a->gamma.is_zero()) continue;
          mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                  a->gamma.den().get_mpz_t());
          num_max = std::max(num_max, a->gamma.num_bits());
        }
      }
    }
    BitConstants bc;
    bc.b0 = 2;
    bc.bmax = mpz_sizeinbase(lcm_den.get_mpz_t(), 2) + num_max;
    return bc;
  }
  const Tufa& g = std::get<Tufa>(m);
  std::vector<const SquareMatrix*> ms;
  for (const auto& mat : g.matrices) ms.push_back(&mat);
  BitConstants bc = constants_from_matrices(ms, g.initial_vector, g.n);
  for (int i = 0; i < g.n; ++i) {
    bc.bmax = std::max(bc.bmax, 1 + g.final_vector[i].num_bits() +
                                    g.final_vector[i].den_bits() +
                                    ceil_log2(static_cast<std::size_t>(g.n)));
  }
  return bc;
}

BitGrowthReport bitgrowth_probe(const RunnableMachine& m,
                                const std::vector<Word>& words) {
  BitGrowthReport report;
  report.constants = machine_bit_constants(m.machine);
  for (const Word& w : words) {
    RunStats stats = run_with_stats(m, w);
    ++report.words_tested;
    for (std::size_t i = 0; i < stats.step_bits.size(); ++i) {
      report.max_bits_seen = std::max(report.max_bits_seen, stats.step_bits[i]);
      if (stats.step_bits[i] >
          report.constants.b0 + (i + 1) * report.constants.bmax) {
        report.violation = w;
        report.violation_step = i;
        return report;
      }
    }
  }
  return report;
}

SyncReport step_sync_probe(const VectorAutomaton& va, const CounterMachine& cm,
                           const std::vector<long>& primes,
                           const std::vector<Word>& words) {
  SyncReport report;
  if (va.dim != 1) throw NotApplicableError("step_sync_probe: dimension must be 1");
  if (static_cast<int>(primes.size()) < cm.k) {
    throw NotApplicableError("step_sync_probe: one prime per counter required");
  }
  for (const Word& w : words) {
    RunTrace tv = run_vector_automaton(va, w);
    RunTrace tc = run_counter_machine(cm, w);
    ++report.words_tested;
    std::size_t steps = std::min(tv.steps.size(), tc.steps.size());
    for (std::size_t i = 0; i < steps; ++i) {
      Rational expected(1);
      for (int j = 0; j < cm.k; ++j) {
        long long c = tc.steps[i].counters[j];
        if (c != 0) expected *= Rational(primes[j]).pow(c);
      }
      if (tv.steps[i].vector[0] != expected) {
        report.violation = w;
        report.violation_step = i;
        report.note = "vector " + tv.steps[i].vector[0].str() +
                      " != counter product " + expected.str();
        return report;
      }
    }
    if (tv.steps.size() != tc.steps.size()) {
      report.violation = w;
      report.violation_step = steps;
      report.note = "trace lengths differ";
      return report;
    }
  }
  return report;
}

std::vector<Word> random_subset_sum_words(std::uint64_t count,
                                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto to_binary = [](long long v) {
    std::string s;
    if (v == 0) return std::string("0");
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + (v & 1)));
      v >>= 1;
    }
    return s;
  };
  std::vector<Word> words;
  words.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::size_t n = 1 + rng.below(6);
    std::vector<long long> values;
    for (std::size_t j = 0; j < n; ++j) {
      values.push_back(static_cast<long long>(rng.below(256)));
    }
    long long t;
    if (rng.below(2) == 0) {
      // Realizable target: sum of a random subset, clamped into range.
      t = 0;
      for (long long v : values) {
        if (rng.below(2) == 0) t += v;
      }
      t &= 0xff;
    } else {
      t = static_cast<long long>(rng.below(256));
    }
    Word w;
    auto push_number = [&](long long v) {
      for (char c : to_binary(v)) w.push_back(std::string(1, c));
      w.push_back("#");
    };
    push_number(t);
    for (long long v : values) push_number(v);
    words.push_back(std::move(w));
  }
  return words;
}

std::vector<Word> all_words(const std::vector<Symbol>& alphabet,
                            std::size_t max_len) {
  std::vector<Word> out;
  WordEnumerator en(alphabet, max_len);
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace rtva
