#include <doctest.h>

#include "rtva/diffcheck.hpp"
#include "rtva/run.hpp"
#include "rtva/transforms.hpp"
#include "rtva/zoo.hpp"

using namespace rtva;

namespace {

RunnableMachine runnable(const ZooEntry& e) {
  return RunnableMachine{e.machine, e.tufa_lambda, RunLimits{}, e.id};
}

std::vector<std::string> collect(WordEnumerator en) {
  std::vector<std::string> out;
  while (auto w = en.next()) out.push_back(word_str(*w));
  return out;
}

}  // namespace

TEST_CASE("enumeration is length-then-lexicographic") {
  CHECK(collect(WordEnumerator({"a"}, 3)) ==
        std::vector<std::string>{"", "a", "aa", "aaa"});
  CHECK(collect(WordEnumerator({"a", "b"}, 2)) ==
        std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(collect(WordEnumerator({"a", "b"}, 0)) ==
        std::vector<std::string>{""});
}

TEST_CASE("enumeration counts match the geometric sums") {
  CHECK(WordEnumerator::count(1, 3) == 4);
  CHECK(WordEnumerator::count(2, 2) == 7);
  CHECK(WordEnumerator::count(3, 10) == 88573);
  CHECK(WordEnumerator::count(2, 14) == 32767);
  std::size_t seen = 0;
  WordEnumerator en({"a", "b", "c"}, 6);
  while (en.next()) ++seen;
  CHECK(seen == WordEnumerator::count(3, 6));
}

TEST_CASE("a machine agrees with itself as oracle") {
  ZooEntry e = build_ugauss_dva2();
  RunnableMachine m = runnable(e);
  auto self = [&m](const Word& w) { return m.verdict(w) == Verdict::Accept; };
  TestReport r = differential_test(m, self, e.alphabet, 25);
  CHECK(r.clean());
  CHECK(r.words_tested == 26);
}

TEST_CASE("equivalence testing is symmetric and reflexive") {
  ZooEntry a = build_ugauss_dva2();
  ZooEntry b = build_ugauss_2ca();
  CHECK(equivalence_test(runnable(a), runnable(a), a.alphabet, 20).clean());
  TestReport ab = equivalence_test(runnable(a), runnable(b), a.alphabet, 30);
  TestReport ba = equivalence_test(runnable(b), runnable(a), a.alphabet, 30);
  CHECK(ab.clean());
  CHECK(ba.clean());
  CHECK(ab.words_tested == ba.words_tested);
}

TEST_CASE("first counterexample is deterministic and replayable") {
  ZooEntry lit = build_geqstar_dva2(true);
  RunnableMachine m = runnable(lit);
  TestReport r = differential_test(m, lit.oracle, lit.alphabet, 6);
  REQUIRE(r.counterexample.has_value());
  Word w = *r.counterexample;
  CHECK(word_str(w) == "ababb");
  // Replay in isolation reproduces the disagreement bit-exactly.
  CHECK(m.verdict(w) == Verdict::Accept);
  CHECK(lit.oracle(w) == false);
  TestReport again = differential_test(m, lit.oracle, lit.alphabet, 6);
  CHECK(word_str(*again.counterexample) == "ababb");
  CHECK(r.words_tested == again.words_tested);
}

TEST_CASE("samplers with one seed agree, different seeds differ") {
  WordSampler s1({"a", "b"}, 9, 42);
  WordSampler s2({"a", "b"}, 9, 42);
  WordSampler s3({"a", "b"}, 9, 43);
  bool any_difference = false;
  for (int i = 0; i < 60; ++i) {
    Word w1 = s1.next();
    CHECK(w1 == s2.next());
    if (!(w1 == s3.next())) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("sampled differential runs count words") {
  ZooEntry e = build_mpal_dbva2();
  TestReport r = differential_test_sampled(runnable(e), e.oracle, e.alphabet,
                                           8, 500, 7);
  CHECK(r.clean());
  CHECK(r.words_tested == 500);
}

TEST_CASE("bit growth: identity machines do not grow") {
  VectorAutomaton m;
  m.core.alphabet = {"a"};
  m.dim = 2;
  m.initial_vector = RowVector{1, 1};
  int q = m.core.add_state("q", true);
  m.check = {CheckSpec{1, 1}};
  m.add_arrow_any(q, "a", q, identity_matrix(2));
  RunnableMachine rm{m, 1, RunLimits{}, "id"};
  BitGrowthReport r = bitgrowth_probe(rm, all_words({"a"}, 20));
  CHECK(r.clean());
  CHECK(r.max_bits_seen == 1);
}

TEST_CASE("bit growth stays within the machine constants") {
  for (const char* id : {"ugauss-dva2", "ugauss-2ca", "mpal-dbva2",
                         "geqstar-fam", "mod3-tufa", "pow-nbva2"}) {
    ZooEntry e = zoo_get(id);
    BitGrowthReport r =
        bitgrowth_probe(runnable(e), all_words(e.alphabet, 7));
    INFO(id);
    CHECK(r.clean());
  }
  // Doubling per step grows one bit per step, well under the constants.
  ZooEntry g = zoo_get("ugauss-dva2");
  BitGrowthReport r = bitgrowth_probe(runnable(g), {Word(100, "a")});
  CHECK(r.clean());
  CHECK(r.max_bits_seen <= 1 + 100 / 2 + 2);
}

TEST_CASE("step synchrony holds for the prime encoding and fails for a lie") {
  ZooEntry e = build_lng(1);
  const auto& va = std::get<VectorAutomaton>(e.machine);
  CounterMachine cm;
  {
    AnyMachine any = e.machine;
    cm = std::get<CounterMachine>(apply_transform(any, "counters"));
  }
  std::vector<Word> words = all_words(e.alphabet, 5);
  CHECK(step_sync_probe(va, cm, {2, 3}, words).clean());
  // Negative control: swapped primes break the identity at the first
  // asymmetric step.
  SyncReport bad = step_sync_probe(va, cm, {3, 2}, words);
  REQUIRE(!bad.clean());
  CHECK(word_str(*bad.violation) == "a1");
  CHECK(bad.violation_step == 1);
}

TEST_CASE("empty word satisfies step synchrony trivially") {
  ZooEntry e = build_lng(1);
  const auto& va = std::get<VectorAutomaton>(e.machine);
  AnyMachine any = e.machine;
  CounterMachine cm = std::get<CounterMachine>(apply_transform(any, "counters"));
  SyncReport r = step_sync_probe(va, cm, {2, 3}, {Word{}});
  CHECK(r.clean());
  CHECK(r.words_tested == 1);
}

TEST_CASE("random subset-sum instances are well-formed and seeded") {
  auto words = random_subset_sum_words(200, 7);
  auto again = random_subset_sum_words(200, 7);
  CHECK(words.size() == 200);
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i] == again[i]);
  bool any_member = false, any_nonmember = false;
  for (const Word& w : words) {
    CHECK(w.back() == "#");
    if (subset_sum_member(w)) {
      any_member = true;
    } else {
      any_nonmember = true;
    }
  }
  CHECK(any_member);
  CHECK(any_nonmember);
}

TEST_CASE("resource errors carry the offending word") {
  VectorAutomaton m;
  m.deterministic = false;
  m.blind = true;
  m.core.alphabet = {"a"};
  m.dim = 2;
  m.initial_vector = RowVector{0, 1};
  m.accept_value = -1;  // unreachable: every word rejects, so enumeration
                        // proceeds until the frontier blows the cap
  int q = m.core.add_state("q", true);
  m.add_arrow_blind(q, "a", q, SquareMatrix{{10, 0}, {1, 1}});
  m.add_arrow_blind(q, "a", q, SquareMatrix{{10, 0}, {2, 1}});
  RunnableMachine rm{m, 1, RunLimits{16, 0, true}, "explode"};
  auto never = [](const Word&) { return false; };
  try {
    differential_test(rm, never, m.core.alphabet, 10);
    FAIL("expected a resource error");
  } catch (const ResourceLimitError& err) {
    CHECK(std::string(err.what()).find("aaaaa") != std::string::npos);
  }
}
