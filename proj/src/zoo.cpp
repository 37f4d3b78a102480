#include "rtva/zoo.hpp"

#include <algorithm>
#include <set>

#include "rtva/errors.hpp"
#include "rtva/primes.hpp"

namespace rtva {
namespace {

const Rational kHalf(1, 2);

SquareMatrix ident(int k) { return identity_matrix(k); }

long count_symbol(const Word& w, const Symbol& s) {
  return std::count(w.begin(), w.end(), s);
}

bool parse_subset_sum_instance(const Word& w, long long& t,
                               std::vector<long long>& values) {
  // Shape: digits+ '#' (digits+ '#')+ over {0,1,#}.
  values.clear();
  std::vector<long long> numbers;
  long long cur = 0;
  int digits = 0;
  for (const auto& s : w) {
    if (s == "#") {
      if (digits == 0) return false;
      numbers.push_back(cur);
      cur = 0;
      digits = 0;
    } else if (s == "0" || s == "1") {
      if (digits >= 40) return false;  // far beyond any certified instance
      cur = cur * 2 + (s == "1" ? 1 : 0);
      ++digits;
    } else {
      return false;
    }
  }
  if (digits != 0) return false;  // must end with '#'
  if (numbers.size() < 2) return false;  // t plus at least one value
  t = numbers.front();
  values.assign(numbers.begin() + 1, numbers.end());
  return true;
}

}  // namespace

bool is_fibonacci(unsigned long n) {
  if (n == 0) return false;
  unsigned long a = 1, b = 2;
  while (a < n) {
    unsigned long c = a + b;
    a = b;
    b = c;
  }
  return a == n;
}

bool is_gauss_number(unsigned long n) {
  for (unsigned long m = 0; m * m + m <= n; ++m) {
    if (m * m + m == n) return true;
  }
  return false;
}

bool is_pow_number(unsigned long n) {
  for (unsigned long k = 1; k < 63; ++k) {
    unsigned long v = k + (1UL << k);
    if (v == n) return true;
    if (v > n) break;
  }
  return false;
}

bool geq_star_member(const Word& w) {
  // Unique decomposition into maximal a-run + b-run blocks; each block must
  // satisfy m >= n >= 1.
  std::size_t i = 0;
  while (i < w.size()) {
    long m = 0, n = 0;
    while (i < w.size() && w[i] == "a") ++m, ++i;
    while (i < w.size() && w[i] == "b") ++n, ++i;
    if (m == 0 || n == 0 || m < n) return false;
  }
  return true;
}

bool subset_sum_member(const Word& w) {
  long long t;
  std::vector<long long> values;
  if (!parse_subset_sum_instance(w, t, values)) return false;
  if (t > (1LL << 20)) throw Error("subset-sum oracle limit exceeded");
  std::vector<char> reachable(static_cast<std::size_t>(t) + 1, 0);
  reachable[0] = 1;
  for (long long v : values) {
    if (v > t) continue;
    for (long long s = t; s >= v; --s) {
      if (reachable[s - v]) reachable[s] = 1;
    }
  }
  return reachable[t] != 0;
}

ZooEntry build_ufibonacci(bool fidelity) {
  SquareMatrix m1{{0, 0, 0, 0, 0},
                  {1, 1, 1, 0, 0},
                  {1, 1, 0, 0, 0},
                  {-1, 0, 0, 1, 0},
                  {-1, 0, 0, 1, 1}};
  SquareMatrix m2{{0, 0, 0, 0, 0},
                  {1, 1, 0, 0, 0},
                  {0, 0, 1, 0, 0},
                  {-1, 0, 0, 1, 0},
                  {-1, 0, 0, 1, 1}};
  VectorAutomaton va;
  va.core.alphabet = {"a"};
  va.dim = 5;
  va.initial_vector = RowVector{0, 1, 0, 0, 1};
  va.accept_value = 0;
  if (fidelity) {
    int q = va.core.add_state("q", true);
    va.check = {CheckSpec{1, 0}};
    va.add_arrow(q, "a", Omega::Eq, q, m1);
    va.add_arrow(q, "a", Omega::Neq, q, m2);
  } else {
    int start = va.core.add_state("start", false);
    int run = va.core.add_state("run", true);
    va.check = {CheckSpec{1, 0}, CheckSpec{1, 0}};
    va.add_arrow(start, "a", Omega::Eq, run, m1);
    va.add_arrow(run, "a", Omega::Eq, run, m1);
    va.add_arrow(run, "a", Omega::Neq, run, m2);
  }
  ZooEntry e;
  e.id = "ufibonacci";
  e.description = "unary strings whose length is in {1, 2, 3, 5, 8, ...}";
  e.machine = std::move(va);
  e.alphabet = {"a"};
  e.oracle = [](const Word& w) { return is_fibonacci(w.size()); };
  e.fidelity_notes =
      "The literal matrices accept the empty word (the watched entry starts "
      "at 0 in an accepting state) while the certified set {1,2,3,5,8,...} "
      "excludes length 0. The corrected machine rejects it with a "
      "non-accepting start state that is left on the first input symbol. "
      "Witness: the empty word.";
  return e;
}

ZooEntry build_ugauss_dva2() {
  // The slow coordinate is kept in entry 1 at all times: the phase-B steps
  // carry a swap folded into the phase-entry and phase-exit matrices, so the
  // one watchable entry drives both direction changes.
  SquareMatrix grow = elementary_matrix(1, 2, 2);        // [[2,0],[0,1]]
  SquareMatrix shift{{kHalf, 0}, {0, 2}};                // drain watched entry
  SquareMatrix enter_b{{0, 2}, {kHalf, 0}};              // swap folded in
  SquareMatrix leave_b{{0, 1}, {2, 0}};                  // swap back, then grow
  VectorAutomaton va;
  va.core.alphabet = {"a"};
  va.dim = 2;
  va.initial_vector = RowVector{1, 1};
  va.accept_value = 1;
  int s0 = va.core.add_state("start", true);
  int pa = va.core.add_state("phaseA", true);
  int pb = va.core.add_state("phaseB", false);
  va.check.assign(3, CheckSpec{1, 1});
  va.add_arrow(s0, "a", Omega::Eq, pa, grow);
  va.add_arrow(pa, "a", Omega::Neq, pa, shift);
  va.add_arrow(pa, "a", Omega::Eq, pb, enter_b);
  va.add_arrow(pb, "a", Omega::Neq, pb, shift);
  va.add_arrow(pb, "a", Omega::Eq, pa, leave_b);
  ZooEntry e;
  e.id = "ugauss-dva2";
  e.description = "unary strings of length m^2 + m";
  e.machine = std::move(va);
  e.alphabet = {"a"};
  e.oracle = [](const Word& w) { return is_gauss_number(w.size()); };
  e.fidelity_notes =
      "The source construction reacts to the second entry reaching 1, which "
      "the one-entry test cannot observe; the shipped machine folds the "
      "coordinate swap into the phase-change matrices so the watched entry "
      "is always entry 1. The recognized language is unchanged (certified "
      "against the arithmetic oracle).";
  return e;
}

ZooEntry build_ugauss_2ca() {
  // Counter 1 is stored shifted by -1 while it is being drained, and counter
  // 2 likewise during its drain, so the sign test fires exactly on the step
  // that completes a drain and accept states can be entered on time.
  CounterMachine cm;
  cm.core.alphabet = {"a"};
  cm.k = 2;
  cm.bound = 1;
  cm.zero_test = ZeroTest::Signs;
  int s0 = cm.core.add_state("start", true);
  int d1 = cm.core.add_state("drain1", false);
  int z1 = cm.core.add_state("zero1", true);
  int d2 = cm.core.add_state("drain2", false);
  int z2 = cm.core.add_state("zero2", false);
  cm.add_arrow_pattern(s0, "a", "**", d1, {0, 0});
  cm.add_arrow_pattern(d1, "a", "+*", d1, {-1, 1});
  cm.add_arrow_pattern(d1, "a", "0*", z1, {0, 0});
  cm.add_arrow_pattern(z1, "a", "*+", d2, {1, -1});
  cm.add_arrow_pattern(z1, "a", "*0", z2, {1, 0});
  cm.add_arrow_pattern(d2, "a", "*+", d2, {1, -1});
  cm.add_arrow_pattern(d2, "a", "*0", z2, {1, 0});
  cm.add_arrow_pattern(z2, "a", "**", d1, {0, 0});
  ZooEntry e;
  e.id = "ugauss-2ca";
  e.description = "unary strings of length m^2 + m, two counters";
  e.machine = std::move(cm);
  e.alphabet = {"a"};
  e.oracle = [](const Word& w) { return is_gauss_number(w.size()); };
  e.fidelity_notes =
      "Counters hold the drained value shifted by one so the zero test fires "
      "on the completing step; the accept schedule matches the source "
      "construction exactly.";
  return e;
}

ZooEntry build_ugauss_2ca_simzero() {
  CounterMachine cm;
  cm.core.alphabet = {"a"};
  cm.k = 2;
  cm.bound = 1;
  cm.zero_test = ZeroTest::SimZero;
  int s0 = cm.core.add_state("start", true);
  int d1 = cm.core.add_state("drain1", false);
  int z1 = cm.core.add_state("zero1", true);
  int d2 = cm.core.add_state("drain2", false);
  int z2 = cm.core.add_state("zero2", false);
  for (const char* key : {"Z", "N"}) {
    cm.add_arrow(s0, "a", key, d1, {0, 0});
    cm.add_arrow(z2, "a", key, d1, {0, 0});
  }
  cm.add_arrow(d1, "a", "Z", z1, {0, 0});
  cm.add_arrow(d1, "a", "N", d1, {-1, 1});
  cm.add_arrow(z1, "a", "Z", z2, {1, 0});
  cm.add_arrow(z1, "a", "N", d2, {1, -1});
  cm.add_arrow(d2, "a", "Z", z2, {1, 0});
  cm.add_arrow(d2, "a", "N", d2, {1, -1});
  ZooEntry e;
  e.id = "ugauss-2ca-simzero";
  e.description =
      "the two-counter skeleton above under simultaneous-zero dispatch "
      "(recognizes {empty, aa})";
  e.machine = std::move(cm);
  e.alphabet = {"a"};
  e.oracle = [](const Word& w) { return w.size() == 0 || w.size() == 2; };
  e.fidelity_notes =
      "Coarsening the sign dispatch to the all-zero bit loses the phase "
      "detection, so the language degenerates to {empty, aa}; from the third "
      "symbol on the machine drains counter 1 below zero forever. The entry "
      "exists to exercise the prime-encoding conversion on increments of "
      "both signs.";
  return e;
}

ZooEntry build_lng(int k) {
  if (k < 1) throw InputError("lng parameter must be at least 1");
  std::vector<long> ps = first_primes(k + 1);
  VectorAutomaton va;
  va.core.alphabet.push_back("a0");
  for (int i = 1; i <= k + 1; ++i) {
    va.core.alphabet.push_back("a" + std::to_string(i));
  }
  va.dim = 1;
  va.initial_vector = RowVector{1};
  va.accept_value = 1;
  int q = va.core.add_state("q", true);
  va.check = {CheckSpec{1, 1}};
  Rational all(1);
  for (long p : ps) all *= Rational(p);
  SquareMatrix down(1);
  down.at(0, 0) = Rational(1) / all;
  va.add_arrow_any(q, "a0", q, down);
  for (int i = 1; i <= k + 1; ++i) {
    SquareMatrix up(1);
    up.at(0, 0) = Rational(ps[i - 1]);
    va.add_arrow_any(q, "a" + std::to_string(i), q, up);
  }
  ZooEntry e;
  e.id = "lng-" + std::to_string(k);
  e.description = "equal occurrence counts of a0..a" + std::to_string(k + 1);
  auto alphabet = va.core.alphabet;
  e.machine = std::move(va);
  e.alphabet = alphabet;
  e.oracle = [alphabet](const Word& w) {
    long first = count_symbol(w, alphabet[0]);
    for (std::size_t i = 1; i < alphabet.size(); ++i) {
      if (count_symbol(w, alphabet[i]) != first) return false;
    }
    return true;
  };
  e.fidelity_notes =
      "The single-entry vector may pass through non-integer values while a0 "
      "runs ahead; only the final value matters and the machine never "
      "consults the equality outcome mid-word.";
  return e;
}

ZooEntry build_geqstar_dva2(bool fidelity) {
  SquareMatrix inc{{1, 0}, {1, 1}};
  SquareMatrix dec{{1, 0}, {-1, 1}};
  SquareMatrix reset{{0, 0}, {0, 1}};
  // Block boundary: reset, then count the boundary symbol itself.
  SquareMatrix boundary = fidelity ? SquareMatrix{{0, 0}, {1, 1}} * inc
                                   : reset * inc;
  VectorAutomaton va;
  va.core.alphabet = {"a", "b"};
  va.dim = 2;
  va.initial_vector = RowVector{0, 1};
  va.accept_value = 0;
  int s0 = va.core.add_state("start", false);
  int ra = va.core.add_state("in-a", false);
  int rb = va.core.add_state("in-b", false);
  int dead = va.core.add_state("dead", false);
  int fin = va.core.add_state("done", true);
  va.check.assign(5, CheckSpec{1, 0});
  va.add_arrow_any(s0, "a", ra, inc);
  va.add_arrow_any(s0, "b", dead, ident(2));
  va.add_arrow_any(ra, "a", ra, inc);
  va.add_arrow(ra, "b", Omega::Eq, dead, ident(2));
  va.add_arrow(ra, "b", Omega::Neq, rb, dec);
  va.add_arrow(rb, "b", Omega::Eq, dead, ident(2));
  va.add_arrow(rb, "b", Omega::Neq, rb, dec);
  va.add_arrow_any(rb, "a", ra, boundary);
  va.add_arrow_any(dead, "a", dead, ident(2));
  va.add_arrow_any(dead, "b", dead, ident(2));
  va.add_arrow_any(s0, kRightEndmarker, fin, reset);
  va.add_arrow_any(rb, kRightEndmarker, fin, reset);
  ZooEntry e;
  e.id = "geqstar-dva2";
  e.description = "concatenations of blocks a^m b^n with m >= n >= 1";
  e.machine = std::move(va);
  e.alphabet = {"a", "b"};
  e.oracle = geq_star_member;
  e.fidelity_notes =
      "The published reset matrix [[0,0],[1,1]], applied before the "
      "boundary increment as the prose orders it, leaves the counter at 2 "
      "instead of 1 after a block boundary. The corrected machine resets "
      "with [[0,0],[0,1]]; note that corrected-reset times increment equals "
      "the published matrix, i.e. that matrix is the right fused boundary "
      "step on its own. First length-lex disagreement of the literal "
      "machine: 'ababb' (length 5); 'aababb' (length 6) is the recorded "
      "witness and disagrees as well.";
  return e;
}

ZooEntry build_geqstar_fam() {
  MultiplyAutomaton fa;
  fa.core.alphabet = {"a", "b"};
  fa.with_equality = true;
  fa.multipliers = {Rational(2), kHalf, Rational(1)};
  int s0 = fa.core.add_state("start", false);
  int ra = fa.core.add_state("in-a", false);
  int rb = fa.core.add_state("in-b", false);
  int drain = fa.core.add_state("drain", false);
  int drend = fa.core.add_state("drain-end", false);
  int dead = fa.core.add_state("dead", false);
  int fin = fa.core.add_state("done", true);
  fa.add_arrow(s0, "a", Omega::Eq, ra, true, 2);
  fa.add_arrow_any(s0, "b", dead, true, 1);
  fa.add_arrow(s0, kRightEndmarker, Omega::Eq, fin, true, 1);
  fa.add_arrow_any(ra, "a", ra, true, 2);
  fa.add_arrow(ra, "b", Omega::Neq, rb, true, kHalf);
  fa.add_arrow(ra, "b", Omega::Eq, dead, true, 1);
  fa.add_arrow_any(ra, kRightEndmarker, dead, true, 1);
  fa.add_arrow(rb, "b", Omega::Eq, dead, true, 1);
  fa.add_arrow(rb, "b", Omega::Neq, rb, true, kHalf);
  fa.add_arrow(rb, "a", Omega::Eq, ra, true, 2);
  fa.add_arrow(rb, "a", Omega::Neq, drain, false, kHalf);
  fa.add_arrow(rb, kRightEndmarker, Omega::Eq, fin, true, 1);
  fa.add_arrow(rb, kRightEndmarker, Omega::Neq, drend, false, kHalf);
  fa.add_arrow(drain, "a", Omega::Neq, drain, false, kHalf);
  fa.add_arrow(drain, "a", Omega::Eq, ra, true, 2);
  fa.add_arrow(drend, kRightEndmarker, Omega::Neq, drend, false, kHalf);
  fa.add_arrow(drend, kRightEndmarker, Omega::Eq, fin, true, 1);
  for (const char* sym : {"a", "b"}) fa.add_arrow_any(dead, sym, dead, true, 1);
  fa.add_arrow_any(dead, kRightEndmarker, dead, true, 1);
  ZooEntry e;
  e.id = "geqstar-fam";
  e.description =
      "the block language above, one-way with a register drained at block "
      "boundaries";
  e.machine = std::move(fa);
  e.alphabet = {"a", "b"};
  e.oracle = geq_star_member;
  e.fidelity_notes =
      "The source gives prose only; the register is drained by pausing on "
      "the first symbol of a new block and, additionally, on the right "
      "endmarker so the final value meets the register-equals-1 acceptance "
      "rule.";
  return e;
}

ZooEntry build_mpal_dbva2() {
  SquareMatrix ma1{{10, 0}, {1, 1}};
  SquareMatrix mb1{{10, 0}, {2, 1}};
  SquareMatrix ma2{{Rational(1, 10), 0}, {Rational(-1, 10), 1}};
  SquareMatrix mb2{{Rational(1, 10), 0}, {Rational(-2, 10), 1}};
  VectorAutomaton va;
  va.deterministic = true;
  va.blind = true;
  va.core.alphabet = {"a", "b", "c"};
  va.dim = 2;
  va.initial_vector = RowVector{0, 1};
  va.accept_value = 0;
  int s1 = va.core.add_state("left", false);
  int s2 = va.core.add_state("right", true);
  int dead = va.core.add_state("dead", false);
  va.add_arrow_blind(s1, "a", s1, ma1);
  va.add_arrow_blind(s1, "b", s1, mb1);
  va.add_arrow_blind(s1, "c", s2, ident(2));
  va.add_arrow_blind(s2, "a", s2, ma2);
  va.add_arrow_blind(s2, "b", s2, mb2);
  va.add_arrow_blind(s2, "c", dead, ident(2));
  for (const char* sym : {"a", "b", "c"}) {
    va.add_arrow_blind(dead, sym, dead, ident(2));
  }
  ZooEntry e;
  e.id = "mpal-dbva2";
  e.description = "w c reverse(w) for w over {a,b}";
  e.machine = std::move(va);
  e.alphabet = {"a", "b", "c"};
  e.oracle = [](const Word& w) {
    auto c = std::find(w.begin(), w.end(), "c");
    if (c == w.end()) return false;
    if (std::find(c + 1, w.end(), "c") != w.end()) return false;
    Word left(w.begin(), c);
    Word right(c + 1, w.end());
    std::reverse(right.begin(), right.end());
    return left == right;
  };
  return e;
}

ZooEntry build_mod_tufa(int k) {
  if (k < 2) throw InputError("mod parameter must be at least 2");
  Tufa g;
  g.n = k;
  g.alphabet = {"a"};
  SquareMatrix cycle(k);
  for (int i = 0; i < k; ++i) cycle.at(i, (i + 1) % k) = 1;
  g.matrices = {cycle};
  g.initial_vector = RowVector(k);
  g.initial_vector[0] = 1;
  g.final_vector = RowVector(k);
  for (int i = 1; i < k; ++i) g.final_vector[i] = 1;
  ZooEntry e;
  e.id = "mod" + std::to_string(k) + "-tufa";
  e.description = "unary strings whose length is not divisible by " +
                  std::to_string(k);
  e.machine = std::move(g);
  e.tufa_lambda = 1;
  e.alphabet = {"a"};
  e.oracle = [k](const Word& w) { return w.size() % k != 0; };
  return e;
}

ZooEntry build_subsetsum_nbva3(bool fidelity) {
  SquareMatrix m0{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  SquareMatrix m1{{2, 0, 0}, {0, 1, 0}, {1, 0, 1}};
  SquareMatrix n0{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  SquareMatrix n1{{1, 0, 0}, {0, 2, 0}, {0, 1, 1}};
  // Subtract the selected value from the target and clear its slot in one
  // real-time step; the literal elementary matrix leaves the slot in place.
  SquareMatrix subtract = fidelity
                              ? SquareMatrix{{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}}
                              : SquareMatrix{{1, 0, 0}, {-1, 0, 0}, {0, 0, 1}};
  VectorAutomaton va;
  va.deterministic = false;
  va.blind = true;
  va.core.alphabet = {"0", "1", "#"};
  va.dim = 3;
  va.initial_vector = RowVector{0, 0, 1};
  va.accept_value = 0;
  int t0 = va.core.add_state("target-first", false);
  int t = va.core.add_state("target", false);
  int b0 = va.core.add_state("blocks-none", false);
  int skip = va.core.add_state("skip", false);
  int take = va.core.add_state("take", false);
  int bn = va.core.add_state("blocks-some", true);
  int dead = va.core.add_state("dead", false);
  va.add_arrow_blind(t0, "0", t, m0);
  va.add_arrow_blind(t0, "1", t, m1);
  va.add_arrow_blind(t0, "#", dead, ident(3));
  va.add_arrow_blind(t, "0", t, m0);
  va.add_arrow_blind(t, "1", t, m1);
  va.add_arrow_blind(t, "#", b0, ident(3));
  for (int from : {b0, bn}) {
    va.add_arrow_blind(from, "0", skip, ident(3));
    va.add_arrow_blind(from, "0", take, n0);
    va.add_arrow_blind(from, "1", skip, ident(3));
    va.add_arrow_blind(from, "1", take, n1);
    va.add_arrow_blind(from, "#", dead, ident(3));
  }
  va.add_arrow_blind(skip, "0", skip, ident(3));
  va.add_arrow_blind(skip, "1", skip, ident(3));
  va.add_arrow_blind(skip, "#", bn, ident(3));
  va.add_arrow_blind(take, "0", take, n0);
  va.add_arrow_blind(take, "1", take, n1);
  va.add_arrow_blind(take, "#", bn, subtract);
  for (const char* sym : {"0", "1", "#"}) {
    va.add_arrow_blind(dead, sym, dead, ident(3));
  }
  ZooEntry e;
  e.id = "subsetsum-nbva3";
  e.description =
      "t#a1#...#an# in binary such that some subset of the ai sums to t";
  e.machine = std::move(va);
  e.alphabet = {"0", "1", "#"};
  e.oracle = subset_sum_member;
  e.fidelity_notes =
      "The published subtraction matrix subtracts the selected value but "
      "leaves it in the second entry, so the next selected value piles onto "
      "the previous one; the corrected step subtracts and clears in one "
      "multiplication, matching the stated reinitialization to 0. Witness: "
      "'10#1#1#' (literal machine rejects, oracle accepts 2 = 1 + 1).";
  return e;
}

ZooEntry build_pow_nbva2() {
  SquareMatrix dbl{{2, 0}, {0, 1}};
  SquareMatrix dec{{1, 0}, {-1, 1}};
  VectorAutomaton va;
  va.deterministic = false;
  va.blind = true;
  va.core.alphabet = {"a"};
  va.dim = 2;
  va.initial_vector = RowVector{1, 1};
  va.accept_value = 0;
  int s0 = va.core.add_state("first", false);
  int s1 = va.core.add_state("double", false);
  int s2 = va.core.add_state("count-down", true);
  va.add_arrow_blind(s0, "a", s1, dbl);
  va.add_arrow_blind(s1, "a", s1, dbl);
  va.add_arrow_blind(s1, "a", s2, dec);
  va.add_arrow_blind(s2, "a", s2, dec);
  ZooEntry e;
  e.id = "pow-nbva2";
  e.description = "unary strings of length k + 2^k for some k >= 1";
  e.machine = std::move(va);
  e.alphabet = {"a"};
  e.oracle = [](const Word& w) { return is_pow_number(w.size()); };
  e.fidelity_notes =
      "The stage switch is only offered from the second symbol on, keeping "
      "at least one doubling before the countdown (the matrices alone would "
      "also accept length 1 via zero doublings).";
  return e;
}

ZooEntry build_eqcount_famw() {
  MultiplyAutomaton fa;
  fa.core.alphabet = {"a", "b"};
  fa.with_equality = false;
  fa.multipliers = {Rational(2), Rational(1, 4)};
  int p0 = fa.core.add_state("even", true);
  int pa = fa.core.add_state("half-a", false);
  fa.add_arrow_noeq(p0, "a", pa, false, 2);  // pause on the symbol once
  fa.add_arrow_noeq(pa, "a", p0, true, 2);
  fa.add_arrow_noeq(p0, "b", p0, true, Rational(1, 4));
  ZooEntry e;
  e.id = "eqcount-famw";
  e.description =
      "equal numbers of a and b; each a is worth two head-pausing doublings";
  e.machine = std::move(fa);
  e.alphabet = {"a", "b"};
  e.oracle = [](const Word& w) {
    return count_symbol(w, "a") == count_symbol(w, "b");
  };
  return e;
}

std::vector<std::string> zoo_ids() {
  return {"ufibonacci",    "ugauss-dva2",     "ugauss-2ca",
          "ugauss-2ca-simzero", "lng-1",      "lng-2",
          "geqstar-dva2",  "geqstar-fam",     "mpal-dbva2",
          "mod2-tufa",     "mod3-tufa",       "mod5-tufa",
          "subsetsum-nbva3", "pow-nbva2",     "eqcount-famw"};
}

ZooEntry zoo_get(const std::string& id, bool fidelity) {
  if (id == "ufibonacci") return build_ufibonacci(fidelity);
  if (id == "ugauss-dva2") return build_ugauss_dva2();
  if (id == "ugauss-2ca") return build_ugauss_2ca();
  if (id == "ugauss-2ca-simzero") return build_ugauss_2ca_simzero();
  if (id == "geqstar-dva2") return build_geqstar_dva2(fidelity);
  if (id == "geqstar-fam") return build_geqstar_fam();
  if (id == "mpal-dbva2") return build_mpal_dbva2();
  if (id == "subsetsum-nbva3" || id == "subsetsum") {
    return build_subsetsum_nbva3(fidelity);
  }
  if (id == "pow-nbva2" || id == "pow") return build_pow_nbva2();
  if (id == "eqcount-famw") return build_eqcount_famw();
  auto parse_param = [&id](const std::string& digits) {
    try {
      std::size_t used = 0;
      int value = std::stoi(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
      return value;
    } catch (const std::logic_error&) {
      throw InputError("unknown zoo id '" + id + "'");
    }
  };
  if (id.starts_with("lng-")) {
    return build_lng(parse_param(id.substr(4)));
  }
  if (id.starts_with("mod") && id.ends_with("-tufa") && id.size() > 8) {
    return build_mod_tufa(parse_param(id.substr(3, id.size() - 8)));
  }
  throw InputError("unknown zoo id '" + id + "'");
}

}  // namespace rtva
