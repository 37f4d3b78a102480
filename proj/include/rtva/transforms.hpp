#pragma once

#include <string>
#include <vector>

#include "rtva/machine.hpp"

namespace rtva {

/// Rewrites a machine whose states may watch arbitrary vector entries into
/// one watching entry 1 everywhere, by conjugating every transition with the
/// source state's swap on the left and the target state's swap on the right
/// (the two coincide when all states watch the same entry). Check constants
/// and accept_value are unchanged; languages are preserved. Blind machines
/// are not applicable.
VectorAutomaton normalize_check_entry(const VectorAutomaton& m);

/// Rewrites a machine testing entry 1 against a uniform constant c (equal to
/// accept_value) into a (k+1)-dimensional machine testing against 1. The
/// added coordinate stays exactly 1 through every run; each transition matrix
/// M becomes E(c-1) * extend(M) * E(1-c) where E(x) adds x times the spare
/// coordinate to entry 1.
VectorAutomaton normalize_check_value(const VectorAutomaton& m);

/// Same-dimension alternative for c != 0: transition matrices become
/// E1(c) * M * E1(1/c) with E1(x) scaling entry 1 by x; the initial vector is
/// scaled by 1/c and tests become "= 1".
VectorAutomaton normalize_check_value_multiplicative(const VectorAutomaton& m);

/// Encodes a one-dimensional machine's multipliers over their prime factor
/// base (ascending) as a multicounter machine with the simultaneous-zero
/// test: value prod p_i^{c_i} is 1 exactly when all counters are zero, and
/// the identity holds after every step. Multipliers must be positive (a zero
/// or negative multiplier has no counter representation); check constants
/// and accept_value must be 1. Because non-blind counter machines accept by
/// state alone, the source's final value test is folded into the endmarker
/// dispatch, routing finishes with nonzero counters to a rejecting sink.
CounterMachine dva1_to_counter_machine(const VectorAutomaton& m);

/// Inverse direction: counter i maps to the i-th prime, an increment vector
/// d to the multiplier prod p_i^{d_i}. Applies to blind machines and to
/// simultaneous-zero machines; sign-dispatching machines are not applicable.
/// Step-synchronous: the vector equals prod p_i^{c_i} at every step. For
/// non-blind inputs the result accepts exactly when the source accepts with
/// all counters zero, which coincides with the source language whenever
/// accept states are only reachable with zero counters (as in the shipped
/// machines); acceptance through nonzero counters cannot be mirrored by a
/// value tied to 1.
VectorAutomaton counter_machine_to_dva1(const CounterMachine& m);

/// Compiles away head pausing: for every (state, symbol) the precomputed
/// pause closure yields the exit state and the product of the multipliers
/// collected while paused; a stay-move loop compiles to an absorbing reject
/// state. The result is a real-time one-dimensional blind machine taking
/// exactly |w| + 2 steps.
VectorAutomaton famw_to_rtdbva1(const MultiplyAutomaton& m);

/// One-state blind machine of dimension n simulating the generalized
/// automaton: per-symbol matrices are carried over and the final vector is
/// folded into the right-endmarker step as column 1. The cutpoint is
/// normalized to 1: for lambda not in {0, 1} the folded column is scaled by
/// 1/lambda; for lambda = 0 one always-1 coordinate is added and the folded
/// column shifted so the test becomes "= 1". With lambda = 1 the final first
/// entry equals the acceptance value exactly.
VectorAutomaton tufa_to_dbva(const Tufa& g, const Rational& lambda);

/// Block construction: one generalized-automaton state per (machine state,
/// coordinate) pair; A blocks carry the transition matrices, the initial
/// vector folds the left-endmarker step, and the final vector folds the
/// right-endmarker step as a per-segment indicator. Membership at cutpoint
/// m.accept_value coincides with acceptance. Only blind deterministic
/// machines are applicable. When accept_value is 0 the rejecting segments
/// point at a provably constant nonzero coordinate (detected syntactically);
/// machines without one get an added always-1 coordinate first.
Tufa dbva_to_tufa(const VectorAutomaton& m);

/// CLI-facing names: check-entry, check-value, check-value-mult, counters,
/// dva1, dbva, tufa.
std::vector<std::string> transform_names();

/// Applies the named transform, dispatching "dbva" on the input kind.
/// Throws NotApplicableError when the machine kind or preconditions do not
/// fit.
AnyMachine apply_transform(const AnyMachine& m, const std::string& name,
                           const Rational& lambda = 1);

}  // namespace rtva
