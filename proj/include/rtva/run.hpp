#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rtva/machine.hpp"

namespace rtva {

enum class Verdict { Accept, Reject, BudgetExhausted };

std::string verdict_str(Verdict v);

/// One executed step. `pos` is the tape index (0 = left endmarker,
/// 1..|w| = input symbols, |w|+1 = right endmarker). Deterministic runs carry
/// the configuration reached after the step; nondeterministic runs carry the
/// frontier size instead. `max_bits` is the largest numerator/denominator
/// (or counter) bit length present after the step.
struct TraceStep {
  std::size_t pos = 0;
  Symbol symbol;
  int state = -1;
  RowVector vector;
  std::vector<long long> counters;
  Rational reg;
  std::size_t frontier_size = 1;
  std::size_t max_bits = 0;
  bool undefined = false;
};

struct RunTrace {
  Verdict verdict = Verdict::Reject;
  std::vector<TraceStep> steps;
  bool undefined_hit = false;
  std::size_t undefined_step = 0;
  std::size_t max_frontier = 1;
  std::size_t max_bits = 0;
  std::string diagnostic;

  bool accepted() const { return verdict == Verdict::Accept; }
};

struct RunLimits {
  std::size_t frontier_cap = 1'000'000;
  /// 0 derives the default budget 10 * (|w| + 2) for head-pausing automata.
  std::size_t step_budget = 0;
  bool dedupe = true;
};

/// Real-time deterministic run over the tape [left] w [right]. Exactly
/// |w| + 2 steps unless an undefined transition is consulted, which ends the
/// run with a flagged reject.
RunTrace run_vector_automaton(const VectorAutomaton& m, const Word& w);

/// Breadth-first configuration-set run. Branches with no applicable
/// transition die; a frontier larger than `cap` (after deduplication) throws
/// ResourceLimitError naming the step. `dedupe` exists as a test hook: the
/// verdict must not depend on it.
RunTrace run_vector_automaton_nondet(const VectorAutomaton& m, const Word& w,
                                     std::size_t cap = 1'000'000,
                                     bool dedupe = true);

/// Incremental frontier evolution for vector automata, one input symbol at a
/// time. Lets callers that probe many prefixes of one long word share the
/// common simulation work; verdicts are identical to whole-word runs.
class NondetRun {
 public:
  struct Config {
    int state;
    RowVector vec;
  };

  NondetRun(const VectorAutomaton& m, std::size_t cap = 1'000'000,
            bool dedupe = true);

  /// Consumes one input symbol (endmarkers are handled internally).
  void step(const Symbol& sym);

  /// Verdict as if the input ended here: applies the right-endmarker step to
  /// a copy of the frontier and tests acceptance.
  Verdict end_verdict() const;

  /// Applies the right-endmarker step in place and returns the verdict; the
  /// run must not be stepped afterwards.
  Verdict finish();

  std::size_t frontier_size() const { return frontier_.size(); }
  std::size_t max_bits_frontier() const;
  std::size_t steps_taken() const { return steps_; }

 private:
  void advance(int sym_id, std::vector<Config>& frontier) const;

  const VectorAutomaton& m_;
  std::size_t cap_;
  bool dedupe_;
  std::size_t steps_ = 0;
  std::vector<Config> frontier_;
};

/// Real-time run dispatching on the counter test mode; acceptance is by
/// state, plus all-zero counters for blind machines.
RunTrace run_counter_machine(const CounterMachine& m, const Word& w);

/// One-way run. Machines with the equality test execute stay-moves under an
/// explicit step budget (exhaustion yields Verdict::BudgetExhausted);
/// machines without it are run through precomputed pause closures, so a
/// stay-move loop rejects immediately and every run takes |w| + 2 steps.
RunTrace run_multiply_automaton(const MultiplyAutomaton& m, const Word& w,
                                std::size_t step_budget = 0);

/// Net effect of pausing on one tape symbol from one state: either the exit
/// state with the accumulated multiplier product, a loop, or undefined.
struct PauseClosure {
  bool defined = true;
  bool loops = false;
  int exit_state = 0;
  Rational product = 1;
};

PauseClosure pause_closure(const MultiplyAutomaton& m, int state, int sym_id);

/// Exact acceptance value v0 * A_{w_1} * ... * A_{w_n} * f.
Rational eval_tufa(const Tufa& g, const Word& w);

/// Exact cutpoint membership: eval_tufa(g, w) == lambda.
bool tufa_member(const Tufa& g, const Rational& lambda, const Word& w);

/// Uniform verdict across machine families (cutpoint needed for Tufa).
Verdict machine_verdict(const AnyMachine& m, const Rational& tufa_lambda,
                        const Word& w, const RunLimits& limits = {});

}  // namespace rtva
