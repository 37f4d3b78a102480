#include <doctest.h>

#include <algorithm>

#include "rtva/diffcheck.hpp"
#include "rtva/errors.hpp"
#include "rtva/run.hpp"
#include "rtva/zoo.hpp"

using namespace rtva;

namespace {

Word uw(std::size_t n) { return Word(n, "a"); }

Word parse(const ZooEntry& e, const std::string& text) {
  return tokenize(text, e.alphabet);
}

}  // namespace

TEST_CASE("deterministic vector automaton runs in real time") {
  ZooEntry e = build_ugauss_dva2();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  CHECK(run_vector_automaton(m, parse(e, "aa")).verdict == Verdict::Accept);
  CHECK(run_vector_automaton(m, Word{}).verdict == Verdict::Accept);
  CHECK(run_vector_automaton(m, parse(e, "aaa")).verdict == Verdict::Reject);
  CHECK(e.oracle(parse(e, "aaa")) == false);

  RunTrace t = run_vector_automaton(m, uw(7));
  CHECK(t.steps.size() == 9);  // left endmarker, 7 symbols, right endmarker
  for (std::size_t i = 0; i < t.steps.size(); ++i) CHECK(t.steps[i].pos == i);
}

TEST_CASE("two runs of one machine produce identical traces") {
  ZooEntry e = build_ugauss_dva2();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  RunTrace a = run_vector_automaton(m, uw(13));
  RunTrace b = run_vector_automaton(m, uw(13));
  REQUIRE(a.steps.size() == b.steps.size());
  CHECK(a.verdict == b.verdict);
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].state == b.steps[i].state);
    CHECK(a.steps[i].vector == b.steps[i].vector);
  }
}

TEST_CASE("undefined transitions reject with a flagged trace") {
  VectorAutomaton m;
  m.core.alphabet = {"a", "b"};
  m.dim = 1;
  m.initial_vector = RowVector{1};
  int q = m.core.add_state("q", true);
  m.check = {CheckSpec{1, 1}};
  m.add_arrow_any(q, "a", q, identity_matrix(1));
  // No arrow for "b".
  RunTrace ok = run_vector_automaton(m, Word{"a"});
  CHECK(ok.verdict == Verdict::Accept);
  CHECK(!ok.undefined_hit);
  RunTrace bad = run_vector_automaton(m, Word{"a", "b"});
  CHECK(bad.verdict == Verdict::Reject);
  CHECK(bad.undefined_hit);
  CHECK(bad.undefined_step == 2);
  CHECK(bad.steps.back().undefined);
}

TEST_CASE("word symbols outside the alphabet are input errors") {
  ZooEntry e = build_ugauss_dva2();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  CHECK_THROWS_AS(run_vector_automaton(m, Word{"z"}), InputError);
  CHECK_THROWS_AS(run_vector_automaton(m, Word{kRightEndmarker}), InputError);
}

TEST_CASE("nondeterministic frontier semantics") {
  ZooEntry e = build_subsetsum_nbva3();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  CHECK(run_vector_automaton_nondet(m, parse(e, "101#11#10#")).verdict ==
        Verdict::Accept);
  CHECK(run_vector_automaton_nondet(m, parse(e, "10#11#")).verdict ==
        Verdict::Reject);
  CHECK(run_vector_automaton_nondet(m, parse(e, "0#1#")).verdict ==
        Verdict::Accept);

  ZooEntry p = build_pow_nbva2();
  const auto& pm = std::get<VectorAutomaton>(p.machine);
  CHECK(run_vector_automaton_nondet(pm, uw(6)).verdict == Verdict::Accept);
  CHECK(run_vector_automaton_nondet(pm, uw(5)).verdict == Verdict::Reject);
  CHECK(run_vector_automaton_nondet(pm, uw(3)).verdict == Verdict::Accept);
}

TEST_CASE("disabling deduplication never changes the verdict") {
  ZooEntry e = build_subsetsum_nbva3();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  for (const char* text : {"0#1#", "10#11#", "1#1#1#", "##", "101#"}) {
    Word w = parse(e, text);
    Verdict with = run_vector_automaton_nondet(m, w, 1 << 20, true).verdict;
    Verdict without = run_vector_automaton_nondet(m, w, 1 << 20, false).verdict;
    CHECK(with == without);
  }
}

TEST_CASE("frontier sizes shrink under dedupe but never the verdict") {
  ZooEntry e = build_pow_nbva2();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  RunTrace with = run_vector_automaton_nondet(m, uw(10), 1 << 20, true);
  RunTrace without = run_vector_automaton_nondet(m, uw(10), 1 << 20, false);
  CHECK(with.verdict == without.verdict);
  CHECK(with.max_frontier <= without.max_frontier);
}

TEST_CASE("verdicts do not depend on successor enumeration order") {
  ZooEntry e = build_subsetsum_nbva3();
  VectorAutomaton forward = std::get<VectorAutomaton>(e.machine);
  VectorAutomaton reversed = forward;
  for (auto& by_sym : reversed.arrows) {
    for (auto& by_om : by_sym) {
      for (auto& opts : by_om) std::reverse(opts.begin(), opts.end());
    }
  }
  WordEnumerator en(e.alphabet, 6);
  while (auto w = en.next()) {
    CHECK(run_vector_automaton_nondet(forward, *w).verdict ==
          run_vector_automaton_nondet(reversed, *w).verdict);
  }
}

TEST_CASE("a deterministic machine through the frontier engine") {
  ZooEntry e = build_ugauss_dva2();
  VectorAutomaton m = std::get<VectorAutomaton>(e.machine);
  m.deterministic = false;  // same arrows, set semantics
  for (std::size_t n = 0; n <= 25; ++n) {
    RunTrace nd = run_vector_automaton_nondet(m, uw(n));
    CHECK(nd.max_frontier <= 1);
    CHECK(nd.verdict == run_vector_automaton(
                            std::get<VectorAutomaton>(e.machine), uw(n))
                            .verdict);
  }
}

TEST_CASE("frontier cap raises a resource error naming the step") {
  // Two digit-appending branches per symbol: all 2^t histories stay distinct.
  VectorAutomaton m;
  m.deterministic = false;
  m.blind = true;
  m.core.alphabet = {"a"};
  m.dim = 2;
  m.initial_vector = RowVector{0, 1};
  int q = m.core.add_state("q", true);
  m.add_arrow_blind(q, "a", q, SquareMatrix{{10, 0}, {1, 1}});
  m.add_arrow_blind(q, "a", q, SquareMatrix{{10, 0}, {2, 1}});
  CHECK_THROWS_AS(run_vector_automaton_nondet(m, uw(12), 100), ResourceLimitError);
  try {
    run_vector_automaton_nondet(m, uw(12), 100);
  } catch (const ResourceLimitError& err) {
    CHECK(err.step == 7);  // 2^7 = 128 > 100
  }
}

TEST_CASE("counter machine runs") {
  ZooEntry e = build_ugauss_2ca();
  const auto& m = std::get<CounterMachine>(e.machine);
  CHECK(run_counter_machine(m, uw(2)).verdict == Verdict::Accept);
  CHECK(run_counter_machine(m, Word{}).verdict == Verdict::Accept);
  CHECK(run_counter_machine(m, uw(20)).verdict == Verdict::Accept);
  CHECK(run_counter_machine(m, uw(3)).verdict == Verdict::Reject);
  RunTrace t = run_counter_machine(m, uw(9));
  CHECK(t.steps.size() == 11);
}

TEST_CASE("blind counter machines accept only with all counters zero") {
  CounterMachine m;
  m.core.alphabet = {"a"};
  m.k = 2;
  m.blind = true;
  m.bound = 1;
  int q = m.core.add_state("q", true);
  m.add_arrow(q, "a", "", q, {1, 1});
  CHECK(run_counter_machine(m, Word{}).verdict == Verdict::Accept);
  CHECK(run_counter_machine(m, uw(1)).verdict == Verdict::Reject);
  CHECK(run_counter_machine(m, uw(4)).verdict == Verdict::Reject);
}

TEST_CASE("one-way multiply automaton with equality test") {
  ZooEntry e = build_geqstar_fam();
  const auto& m = std::get<MultiplyAutomaton>(e.machine);
  CHECK(run_multiply_automaton(m, parse(e, "aab")).verdict == Verdict::Accept);
  CHECK(run_multiply_automaton(m, parse(e, "abb")).verdict == Verdict::Reject);
  CHECK(run_multiply_automaton(m, parse(e, "ba")).verdict == Verdict::Reject);
  CHECK(run_multiply_automaton(m, parse(e, "abaab")).verdict == Verdict::Accept);
  CHECK(run_multiply_automaton(m, Word{}).verdict == Verdict::Accept);
}

TEST_CASE("step budget exhaustion is its own verdict") {
  MultiplyAutomaton m;
  m.core.alphabet = {"a"};
  m.with_equality = true;
  m.multipliers = {Rational(2)};
  int q = m.core.add_state("q", true);
  // Pause forever, doubling: the register never returns to 1.
  m.add_arrow(q, "a", Omega::Eq, q, false, 2);
  m.add_arrow(q, "a", Omega::Neq, q, false, 2);
  RunTrace t = run_multiply_automaton(m, Word{"a"}, 25);
  CHECK(t.verdict == Verdict::BudgetExhausted);
  CHECK(t.diagnostic.find("budget") != std::string::npos);
}

TEST_CASE("multiply automata without the test run through pause closures") {
  // All multipliers 1, every state accepting: accepts every word.
  MultiplyAutomaton m;
  m.core.alphabet = {"a", "b"};
  m.with_equality = false;
  m.multipliers = {Rational(1)};
  int q = m.core.add_state("q", true);
  for (const char* s : {"a", "b"}) m.add_arrow_noeq(q, s, q, true, 1);
  for (const char* text : {"", "a", "ab", "bbba"}) {
    Word w = tokenize(text, m.core.alphabet);
    RunTrace t = run_multiply_automaton(m, w);
    CHECK(t.verdict == Verdict::Accept);
    CHECK(t.steps.size() == w.size() + 2);
  }

  ZooEntry e = build_eqcount_famw();
  const auto& fm = std::get<MultiplyAutomaton>(e.machine);
  CHECK(run_multiply_automaton(fm, parse(e, "ab")).verdict == Verdict::Accept);
  CHECK(run_multiply_automaton(fm, parse(e, "aab")).verdict == Verdict::Reject);
  CHECK(run_multiply_automaton(fm, parse(e, "baba")).verdict == Verdict::Accept);
  // Real-time despite the pausing source description.
  CHECK(run_multiply_automaton(fm, parse(e, "abab")).steps.size() == 6);
}

TEST_CASE("a stay-move loop rejects immediately") {
  MultiplyAutomaton m;
  m.core.alphabet = {"a"};
  m.with_equality = false;
  m.multipliers = {Rational(2)};
  int q = m.core.add_state("q", true);
  m.add_arrow_noeq(q, "a", q, false, 2);  // never leaves the symbol
  RunTrace t = run_multiply_automaton(m, Word{"a"});
  CHECK(t.verdict == Verdict::Reject);
  CHECK(t.diagnostic.find("pauses forever") != std::string::npos);
  CHECK(run_multiply_automaton(m, Word{}).verdict == Verdict::Accept);
}

TEST_CASE("generalized automaton evaluation") {
  ZooEntry e = build_mod_tufa(3);
  const auto& g = std::get<Tufa>(e.machine);
  CHECK(eval_tufa(g, uw(2)) == Rational(1));
  CHECK(eval_tufa(g, uw(3)) == Rational(0));
  CHECK(eval_tufa(g, Word{}) == Rational(0));
  CHECK(tufa_member(g, 1, uw(2)));
  CHECK(!tufa_member(g, 1, uw(3)));
  CHECK(tufa_member(g, eval_tufa(g, uw(5)), uw(5)));
  CHECK_THROWS_AS(eval_tufa(g, Word{"z"}), InputError);
}

TEST_CASE("machine validation enforces the structural invariants") {
  ZooEntry e = build_ugauss_dva2();
  VectorAutomaton m = std::get<VectorAutomaton>(e.machine);
  m.validate();

  VectorAutomaton branching = m;
  branching.add_arrow(0, "a", Omega::Eq, 0, identity_matrix(2));
  CHECK_THROWS_AS(branching.validate(), ValidationError);  // deterministic

  VectorAutomaton bad_check = m;
  bad_check.check[0].entry = 3;
  CHECK_THROWS_AS(bad_check.validate(), ValidationError);

  VectorAutomaton bad_dim = m;
  bad_dim.initial_vector = RowVector{1};
  CHECK_THROWS_AS(bad_dim.validate(), ValidationError);

  VectorAutomaton reserved = m;
  reserved.core.alphabet.push_back(kRightEndmarker);
  CHECK_THROWS_AS(reserved.validate(), ValidationError);

  CounterMachine cm = std::get<CounterMachine>(build_ugauss_2ca().machine);
  cm.validate();
  CounterMachine wide = cm;
  wide.arrows[0][0].begin()->second.inc = {2, 0};  // exceeds bound 1
  CHECK_THROWS_AS(wide.validate(), ValidationError);

  CHECK_THROWS_AS(run_vector_automaton(
                      std::get<VectorAutomaton>(build_pow_nbva2().machine),
                      Word{}),
                  ValidationError);  // nondeterministic machine, wrong runner
}

TEST_CASE("incremental frontier run matches whole-word runs") {
  ZooEntry e = build_pow_nbva2();
  const auto& m = std::get<VectorAutomaton>(e.machine);
  NondetRun run(m);
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(run.end_verdict() == run_vector_automaton_nondet(m, uw(n)).verdict);
    run.step("a");
  }
}
