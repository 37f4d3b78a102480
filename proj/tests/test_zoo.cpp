#include <doctest.h>

#include "rtva/diffcheck.hpp"
#include "rtva/run.hpp"
#include "rtva/zoo.hpp"

using namespace rtva;

namespace {

Word uw(std::size_t n) { return Word(n, "a"); }

RunnableMachine runnable(const ZooEntry& e) {
  return RunnableMachine{e.machine, e.tufa_lambda, RunLimits{}, e.id};
}

Verdict verdict_of(const ZooEntry& e, const std::string& text) {
  return runnable(e).verdict(tokenize(text, e.alphabet));
}

void certify(const ZooEntry& e, std::size_t max_len) {
  TestReport r = differential_test(runnable(e), e.oracle, e.alphabet, max_len);
  INFO(e.id, " vs oracle: ",
       r.counterexample ? word_str(*r.counterexample) : "(clean)");
  CHECK(r.clean());
}

}  // namespace

TEST_CASE("fibonacci-length machine") {
  ZooEntry e = build_ufibonacci();
  CHECK(verdict_of(e, "aaaaa") == Verdict::Accept);
  CHECK(verdict_of(e, "aaaa") == Verdict::Reject);
  CHECK(verdict_of(e, "aa") == Verdict::Accept);
  CHECK(verdict_of(e, "") == Verdict::Reject);
  certify(e, 40);

  // The literal single-state machine accepts the empty word; that is its
  // only disagreement with the oracle.
  ZooEntry lit = build_ufibonacci(true);
  CHECK(verdict_of(lit, "") == Verdict::Accept);
  TestReport r = differential_test(runnable(lit), lit.oracle, lit.alphabet, 30);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->empty());
}

TEST_CASE("square-plus-side length machine, vector form") {
  ZooEntry e = build_ugauss_dva2();
  CHECK(verdict_of(e, "") == Verdict::Accept);
  CHECK(verdict_of(e, "aa") == Verdict::Accept);
  CHECK(runnable(e).verdict(uw(12)) == Verdict::Accept);
  CHECK(runnable(e).verdict(uw(13)) == Verdict::Reject);
  certify(e, 60);
}

TEST_CASE("square-plus-side length machine, counter form") {
  ZooEntry e = build_ugauss_2ca();
  CHECK(verdict_of(e, "aa") == Verdict::Accept);
  CHECK(verdict_of(e, "") == Verdict::Accept);
  CHECK(runnable(e).verdict(uw(20)) == Verdict::Accept);
  certify(e, 60);
}

TEST_CASE("simultaneous-zero variant recognizes its degenerate language") {
  ZooEntry e = build_ugauss_2ca_simzero();
  CHECK(verdict_of(e, "") == Verdict::Accept);
  CHECK(verdict_of(e, "aa") == Verdict::Accept);
  CHECK(verdict_of(e, "a") == Verdict::Reject);
  certify(e, 30);
}

TEST_CASE("equal-counts machines") {
  ZooEntry e1 = build_lng(1);
  CHECK(e1.alphabet.size() == 3);
  CHECK(verdict_of(e1, "a0a1a2") == Verdict::Accept);
  CHECK(verdict_of(e1, "a2a0a1") == Verdict::Accept);
  CHECK(verdict_of(e1, "a0a1") == Verdict::Reject);
  CHECK(verdict_of(e1, "") == Verdict::Accept);
  certify(e1, 6);

  ZooEntry e2 = build_lng(2);
  CHECK(e2.alphabet.size() == 4);
  CHECK(verdict_of(e2, "") == Verdict::Accept);
  CHECK(verdict_of(e2, "a0a0a1a2") == Verdict::Reject);
  CHECK(verdict_of(e2, "a3a0a1a2") == Verdict::Accept);
  certify(e2, 4);
}

TEST_CASE("block language, vector form") {
  ZooEntry e = build_geqstar_dva2();
  CHECK(verdict_of(e, "aab") == Verdict::Accept);
  CHECK(verdict_of(e, "abb") == Verdict::Reject);
  CHECK(verdict_of(e, "aabab") == Verdict::Accept);
  CHECK(verdict_of(e, "") == Verdict::Accept);
  CHECK(verdict_of(e, "ba") == Verdict::Reject);
  certify(e, 9);
}

TEST_CASE("literal reset matrix overcounts at block boundaries") {
  ZooEntry lit = build_geqstar_dva2(true);
  // Both recorded words disagree with the oracle; the length-lex-first
  // disagreement comes at length 5.
  CHECK(verdict_of(lit, "ababb") == Verdict::Accept);
  CHECK(lit.oracle(tokenize("ababb", lit.alphabet)) == false);
  CHECK(verdict_of(lit, "aababb") == Verdict::Accept);
  CHECK(lit.oracle(tokenize("aababb", lit.alphabet)) == false);
  TestReport r = differential_test(runnable(lit), lit.oracle, lit.alphabet, 6);
  REQUIRE(r.counterexample.has_value());
  CHECK(word_str(*r.counterexample) == "ababb");
  // The corrected machine agrees on both witnesses.
  ZooEntry fixed = build_geqstar_dva2();
  CHECK(verdict_of(fixed, "ababb") == Verdict::Reject);
  CHECK(verdict_of(fixed, "aababb") == Verdict::Reject);
}

TEST_CASE("block language, one-way register form") {
  ZooEntry e = build_geqstar_fam();
  CHECK(verdict_of(e, "aab") == Verdict::Accept);
  CHECK(verdict_of(e, "abaab") == Verdict::Accept);
  CHECK(verdict_of(e, "ba") == Verdict::Reject);
  certify(e, 9);
}

TEST_CASE("marked palindromes") {
  ZooEntry e = build_mpal_dbva2();
  CHECK(verdict_of(e, "abcba") == Verdict::Accept);
  CHECK(verdict_of(e, "c") == Verdict::Accept);
  CHECK(verdict_of(e, "abcab") == Verdict::Reject);
  CHECK(verdict_of(e, "ab") == Verdict::Reject);
  CHECK(verdict_of(e, "cc") == Verdict::Reject);
  certify(e, 7);
}

TEST_CASE("residue machines") {
  ZooEntry e = build_mod_tufa(3);
  CHECK(verdict_of(e, "a") == Verdict::Accept);
  CHECK(verdict_of(e, "aaa") == Verdict::Reject);
  CHECK(verdict_of(e, "") == Verdict::Reject);
  certify(e, 30);
  certify(build_mod_tufa(2), 30);
  certify(build_mod_tufa(5), 30);
}

TEST_CASE("subset-sum machine") {
  ZooEntry e = build_subsetsum_nbva3();
  CHECK(verdict_of(e, "101#11#10#") == Verdict::Accept);
  CHECK(verdict_of(e, "10#11#") == Verdict::Reject);
  CHECK(verdict_of(e, "0#1#") == Verdict::Accept);
  CHECK(verdict_of(e, "#") == Verdict::Reject);    // empty target
  CHECK(verdict_of(e, "1#") == Verdict::Reject);   // no values
  CHECK(verdict_of(e, "1#1") == Verdict::Reject);  // unterminated value
  certify(e, 6);

  ZooEntry lit = build_subsetsum_nbva3(true);
  Word witness = tokenize("10#1#1#", lit.alphabet);
  CHECK(runnable(lit).verdict(witness) == Verdict::Reject);
  CHECK(lit.oracle(witness) == true);
  CHECK(runnable(e).verdict(witness) == Verdict::Accept);
}

TEST_CASE("doubling-then-countdown machine") {
  ZooEntry e = build_pow_nbva2();
  CHECK(runnable(e).verdict(uw(3)) == Verdict::Accept);
  CHECK(runnable(e).verdict(uw(6)) == Verdict::Accept);
  CHECK(runnable(e).verdict(uw(4)) == Verdict::Reject);
  CHECK(runnable(e).verdict(uw(1)) == Verdict::Reject);
  certify(e, 40);
}

TEST_CASE("pausing register machine with equal counts") {
  ZooEntry e = build_eqcount_famw();
  CHECK(verdict_of(e, "") == Verdict::Accept);
  CHECK(verdict_of(e, "ab") == Verdict::Accept);
  CHECK(verdict_of(e, "ba") == Verdict::Accept);
  CHECK(verdict_of(e, "aab") == Verdict::Reject);
  certify(e, 8);
}

TEST_CASE("the registry lists and resolves every entry") {
  for (const std::string& id : zoo_ids()) {
    ZooEntry e = zoo_get(id);
    CHECK(e.id == id);
    validate_machine(e.machine);
    CHECK(!e.alphabet.empty());
    CHECK(e.oracle != nullptr);
  }
  CHECK(zoo_get("subsetsum").id == "subsetsum-nbva3");
  CHECK(zoo_get("pow").id == "pow-nbva2");
  CHECK(zoo_get("lng-3").alphabet.size() == 5);
  CHECK(zoo_get("mod7-tufa").id == "mod7-tufa");
  CHECK_THROWS_AS(zoo_get("no-such-machine"), InputError);
}

TEST_CASE("oracles use plain arithmetic and match their definitions") {
  CHECK(is_fibonacci(1));
  CHECK(is_fibonacci(2));
  CHECK(is_fibonacci(3));
  CHECK(is_fibonacci(5));
  CHECK(!is_fibonacci(0));
  CHECK(!is_fibonacci(4));
  CHECK(is_fibonacci(233));
  CHECK(is_gauss_number(0));
  CHECK(is_gauss_number(2));
  CHECK(is_gauss_number(6));
  CHECK(is_gauss_number(380));  // 19^2 + 19
  CHECK(!is_gauss_number(7));
  CHECK(is_pow_number(3));
  CHECK(is_pow_number(1034));
  CHECK(!is_pow_number(1));
  CHECK(!is_pow_number(4));
  CHECK(geq_star_member(Word{}));
  CHECK(geq_star_member(tokenize("aabab", {"a", "b"})));
  CHECK(!geq_star_member(tokenize("ababb", {"a", "b"})));
  CHECK(subset_sum_member(tokenize("101#11#10#", {"0", "1", "#"})));
  CHECK(!subset_sum_member(tokenize("10#11#", {"0", "1", "#"})));
  CHECK(subset_sum_member(tokenize("0#1#", {"0", "1", "#"})));
  CHECK(!subset_sum_member(Word{}));
}
