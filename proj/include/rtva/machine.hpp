#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rtva/linalg.hpp"

namespace rtva {

/// Input symbols are strings so alphabets like {a0, a1, a2} work; words are
/// symbol sequences. The endmarkers frame every tape and never occur in an
/// input word.
using Symbol = std::string;
using Word = std::vector<Symbol>;

inline const Symbol kLeftEndmarker = "¢";
inline const Symbol kRightEndmarker = "$";

/// Concatenation of a word's symbols, for display and reports.
std::string word_str(const Word& w);

/// Splits `text` into symbols of `alphabet` by greedy longest match.
/// Throws InputError when no symbol matches at some position.
Word tokenize(const std::string& text, const std::vector<Symbol>& alphabet);

/// Outcome of the mid-run equality test on the watched vector entry /
/// register.
enum class Omega { Eq = 0, Neq = 1 };

/// Which vector entry a state watches, and against which constant.
struct CheckSpec {
  int entry = 1;  // 1-based
  Rational constant = 1;
  friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

/// State and alphabet bookkeeping shared by all machine families.
///
/// Symbol ids are 0..|alphabet|-1 for input symbols followed by the left and
/// right endmarkers.
struct MachineCore {
  std::vector<std::string> states;
  int initial = 0;
  std::vector<bool> accepting;
  std::vector<Symbol> alphabet;

  int add_state(const std::string& name, bool accept = false);
  /// add_state with a numeric suffix when the name is already taken.
  int add_unique_state(const std::string& base, bool accept = false);
  int state_index(const std::string& name) const;  // -1 when absent
  int num_states() const { return static_cast<int>(states.size()); }
  int num_symbol_ids() const { return static_cast<int>(alphabet.size()) + 2; }
  int left_id() const { return static_cast<int>(alphabet.size()); }
  int right_id() const { return static_cast<int>(alphabet.size()) + 1; }
  int symbol_id(const Symbol& s) const;  // -1 when unknown
  const Symbol& symbol_name(int id) const;

  void validate() const;
  friend bool operator==(const MachineCore&, const MachineCore&) = default;
};

struct VectorArrow {
  int target = 0;
  SquareMatrix matrix;
  friend bool operator==(const VectorArrow&, const VectorArrow&) = default;
};

/// Real-time vector automaton, covering the deterministic/nondeterministic
/// and sighted/blind variants via the two flags.
///
/// Non-blind transitions dispatch on (state, symbol, omega) where omega
/// compares the state's watched entry with its check constant; blind machines
/// dispatch on (state, symbol) only. A word is accepted when, after the
/// right-endmarker step, the machine is in an accepting state and the watched
/// entry of the final state (entry 1 for blind machines) equals accept_value.
/// Endmarker rows may be omitted; simulators then keep the state and multiply
/// by the identity.
struct VectorAutomaton {
  MachineCore core;
  bool deterministic = true;
  bool blind = false;
  int dim = 1;
  RowVector initial_vector;
  std::vector<CheckSpec> check;  // per state; unused when blind
  Rational accept_value = 1;
  // arrows[state][symbol_id][omega]; blind machines use omega slot 0.
  std::vector<std::vector<std::array<std::vector<VectorArrow>, 2>>> arrows;

  void add_arrow(int from, const Symbol& sym, Omega om, int to,
                 const SquareMatrix& m);
  /// Same arrow under both omega outcomes (non-blind convenience).
  void add_arrow_any(int from, const Symbol& sym, int to,
                     const SquareMatrix& m);
  void add_arrow_blind(int from, const Symbol& sym, int to,
                       const SquareMatrix& m);
  const std::vector<VectorArrow>& arrows_for(int state, int sym_id,
                                             Omega om) const;
  const CheckSpec& check_for(int state) const;

  void validate() const;
  friend bool operator==(const VectorAutomaton&,
                         const VectorAutomaton&) = default;

 private:
  void ensure_sizes();
};

/// Dispatch mode of a counter machine's mid-run test.
enum class ZeroTest { Signs, SimZero };

struct CounterArrow {
  int target = 0;
  std::vector<int> inc;
  friend bool operator==(const CounterArrow&, const CounterArrow&) = default;
};

/// Real-time deterministic multicounter machine, general or blind, with
/// integer increments bounded by `bound` in absolute value.
///
/// Non-blind machines dispatch on a theta key derived from the current
/// counters: with ZeroTest::Signs a string over {-,0,+} (one char per
/// counter), with ZeroTest::SimZero "Z" (all zero) or "N". Blind machines use
/// the empty key. Acceptance after the right endmarker: accepting state, plus
/// all counters zero for blind machines. Omitted endmarker rows default to
/// zero increments with the state unchanged.
struct CounterMachine {
  MachineCore core;
  int k = 1;
  bool blind = false;
  int bound = 1;
  ZeroTest zero_test = ZeroTest::Signs;
  // arrows[state][symbol_id] keyed by theta.
  std::vector<std::vector<std::map<std::string, CounterArrow>>> arrows;

  void add_arrow(int from, const Symbol& sym, const std::string& theta, int to,
                 std::vector<int> inc);
  /// Signs-mode convenience: '*' in the pattern matches -, 0 and +.
  void add_arrow_pattern(int from, const Symbol& sym,
                         const std::string& pattern, int to,
                         std::vector<int> inc);
  const CounterArrow* arrow_for(int state, int sym_id,
                                const std::string& theta) const;

  std::string theta_key(const std::vector<long long>& counters) const;

  void validate() const;
  friend bool operator==(const CounterMachine&,
                         const CounterMachine&) = default;

 private:
  void ensure_sizes();
};

struct MultiplyArrow {
  int target = 0;
  bool move_right = true;
  Rational gamma = 1;
  friend bool operator==(const MultiplyArrow&, const MultiplyArrow&) = default;
};

/// One-way finite automaton with a rational register multiplied by a chosen
/// gamma each step; the head may pause. with_equality distinguishes the
/// variant that can compare the register with 1 mid-run from the one that
/// cannot. Acceptance: accepting state with register exactly 1 after the
/// right endmarker is consumed. Omitted endmarker rows default to a rightward
/// move with gamma 1 and the state unchanged.
struct MultiplyAutomaton {
  MachineCore core;
  bool with_equality = true;
  std::vector<Rational> multipliers;  // the finite multiplier set
  // arrows[state][symbol_id][omega]; variants without the equality test use
  // omega slot 0.
  std::vector<std::vector<std::array<std::optional<MultiplyArrow>, 2>>> arrows;

  void add_arrow(int from, const Symbol& sym, Omega om, int to,
                 bool move_right, const Rational& gamma);
  void add_arrow_any(int from, const Symbol& sym, int to, bool move_right,
                     const Rational& gamma);
  void add_arrow_noeq(int from, const Symbol& sym, int to, bool move_right,
                      const Rational& gamma);
  const std::optional<MultiplyArrow>& arrow_for(int state, int sym_id,
                                                Omega om) const;

  void validate() const;
  friend bool operator==(const MultiplyAutomaton&,
                         const MultiplyAutomaton&) = default;

 private:
  void ensure_sizes();
};

/// Generalized finite automaton over the rationals: an initial row vector,
/// one n x n matrix per symbol, and a final vector. The acceptance value of a
/// word is the full product; languages are cut out by exact equality with a
/// rational cutpoint.
struct Tufa {
  int n = 1;
  std::vector<Symbol> alphabet;
  std::vector<SquareMatrix> matrices;  // by alphabet index
  RowVector initial_vector;
  RowVector final_vector;

  int symbol_id(const Symbol& s) const;  // -1 when unknown

  void validate() const;
  friend bool operator==(const Tufa&, const Tufa&) = default;
};

using AnyMachine =
    std::variant<VectorAutomaton, CounterMachine, MultiplyAutomaton, Tufa>;

/// Short kind tag: dva, dbva, nva, nbva, counter, fam, famw, tufa.
std::string machine_kind(const AnyMachine& m);

/// The machine's input alphabet (endmarkers excluded).
const std::vector<Symbol>& machine_alphabet(const AnyMachine& m);

void validate_machine(const AnyMachine& m);

}  // namespace rtva
