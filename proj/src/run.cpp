#include "rtva/run.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "rtva/errors.hpp"

namespace rtva {
namespace {

std::size_t ll_bits(long long v) {
  unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v)
                               : static_cast<unsigned long long>(v);
  return u == 0 ? 1 : static_cast<std::size_t>(std::bit_width(u));
}

std::size_t counter_bits(const std::vector<long long>& cs) {
  std::size_t b = 1;
  for (long long c : cs) b = std::max(b, ll_bits(c));
  return b;
}

// Tape symbol ids for [left] w [right]; throws on symbols outside Sigma.
std::vector<int> tape_ids(const MachineCore& core, const Word& w) {
  std::vector<int> ids;
  ids.reserve(w.size() + 2);
  ids.push_back(core.left_id());
  for (const auto& s : w) {
    int sid = core.symbol_id(s);
    if (sid < 0 || sid >= static_cast<int>(core.alphabet.size())) {
      throw InputError("symbol '" + s + "' is not in the machine alphabet");
    }
    ids.push_back(sid);
  }
  ids.push_back(core.right_id());
  return ids;
}

Omega omega_of(const VectorAutomaton& m, int state, const RowVector& v) {
  const CheckSpec& c = m.check_for(state);
  return v[c.entry - 1] == c.constant ? Omega::Eq : Omega::Neq;
}

bool vector_accepts(const VectorAutomaton& m, int state, const RowVector& v) {
  if (!m.core.accepting[state]) return false;
  int entry = m.blind ? 1 : m.check_for(state).entry;
  return v[entry - 1] == m.accept_value;
}

struct ConfigHash {
  std::size_t operator()(const NondetRun::Config& c) const {
    return static_cast<std::size_t>(
        hash_mix(c.vec.hash(), static_cast<std::uint64_t>(c.state)));
  }
};

struct ConfigEq {
  bool operator()(const NondetRun::Config& a,
                  const NondetRun::Config& b) const {
    return a.state == b.state && a.vec == b.vec;
  }
};

}  // namespace

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Accept:
      return "ACCEPT";
    case Verdict::Reject:
      return "REJECT";
    default:
      return "BUDGET-EXHAUSTED";
  }
}

RunTrace run_vector_automaton(const VectorAutomaton& m, const Word& w) {
  if (!m.deterministic) {
    throw ValidationError("deterministic runner on a nondeterministic machine");
  }
  if (m.initial_vector.dim() != m.dim) {
    throw DimensionError("initial vector does not match machine dimension");
  }
  RunTrace trace;
  std::vector<int> tape = tape_ids(m.core, w);
  int state = m.core.initial;
  RowVector v = m.initial_vector;
  trace.max_bits = v.max_bits();
  for (std::size_t pos = 0; pos < tape.size(); ++pos) {
    int sid = tape[pos];
    Omega om = m.blind ? Omega::Eq : omega_of(m, state, v);
    const auto& opts = m.arrows_for(state, sid, om);
    TraceStep step;
    step.pos = pos;
    step.symbol = m.core.symbol_name(sid);
    if (opts.empty()) {
      bool endmarker = sid >= static_cast<int>(m.core.alphabet.size());
      if (!endmarker) {
        step.state = state;
        step.vector = v;
        step.undefined = true;
        step.max_bits = v.max_bits();
        trace.steps.push_back(std::move(step));
        trace.undefined_hit = true;
        trace.undefined_step = pos;
        trace.verdict = Verdict::Reject;
        trace.diagnostic = "undefined transition at step " + std::to_string(pos);
        return trace;
      }
      // Omitted endmarker row: identity matrix, state unchanged.
    } else {
      const VectorArrow& a = opts.front();
      v = v * a.matrix;
      state = a.target;
    }
    step.state = state;
    step.vector = v;
    step.max_bits = v.max_bits();
    trace.max_bits = std::max(trace.max_bits, step.max_bits);
    trace.steps.push_back(std::move(step));
  }
  trace.verdict =
      vector_accepts(m, state, v) ? Verdict::Accept : Verdict::Reject;
  return trace;
}

NondetRun::NondetRun(const VectorAutomaton& m, std::size_t cap, bool dedupe)
    : m_(m), cap_(cap), dedupe_(dedupe) {
  if (m.initial_vector.dim() != m.dim) {
    throw DimensionError("initial vector does not match machine dimension");
  }
  frontier_.push_back(Config{m.core.initial, m.initial_vector});
  advance(m.core.left_id(), frontier_);
  steps_ = 1;
}

void NondetRun::advance(int sym_id, std::vector<Config>& frontier) const {
  std::vector<Config> next;
  std::unordered_set<Config, ConfigHash, ConfigEq> seen;
  bool endmarker = sym_id >= static_cast<int>(m_.core.alphabet.size());
  for (const Config& c : frontier) {
    Omega om = m_.blind ? Omega::Eq : omega_of(m_, c.state, c.vec);
    const auto& opts = m_.arrows_for(c.state, sym_id, om);
    auto push = [&](Config&& succ) {
      if (dedupe_) {
        if (seen.insert(succ).second) next.push_back(std::move(succ));
      } else {
        next.push_back(std::move(succ));
      }
    };
    if (opts.empty()) {
      if (endmarker) push(Config{c.state, c.vec});
      // Branches with no applicable transition on an input symbol die.
      continue;
    }
    for (const VectorArrow& a : opts) {
      push(Config{a.target, c.vec * a.matrix});
    }
  }
  if (next.size() > cap_) {
    throw ResourceLimitError("frontier of " + std::to_string(next.size()) +
                                 " configurations exceeds cap at step " +
                                 std::to_string(steps_),
                             steps_);
  }
  frontier = std::move(next);
}

void NondetRun::step(const Symbol& sym) {
  int sid = m_.core.symbol_id(sym);
  if (sid < 0 || sid >= static_cast<int>(m_.core.alphabet.size())) {
    throw InputError("symbol '" + sym + "' is not in the machine alphabet");
  }
  advance(sid, frontier_);
  ++steps_;
}

Verdict NondetRun::end_verdict() const {
  std::vector<Config> fin = frontier_;
  advance(m_.core.right_id(), fin);
  for (const Config& c : fin) {
    if (vector_accepts(m_, c.state, c.vec)) return Verdict::Accept;
  }
  return Verdict::Reject;
}

Verdict NondetRun::finish() {
  advance(m_.core.right_id(), frontier_);
  ++steps_;
  for (const Config& c : frontier_) {
    if (vector_accepts(m_, c.state, c.vec)) return Verdict::Accept;
  }
  return Verdict::Reject;
}

std::size_t NondetRun::max_bits_frontier() const {
  std::size_t b = 1;
  for (const Config& c : frontier_) b = std::max(b, c.vec.max_bits());
  return b;
}

RunTrace run_vector_automaton_nondet(const VectorAutomaton& m, const Word& w,
                                     std::size_t cap, bool dedupe) {
  RunTrace trace;
  NondetRun run(m, cap, dedupe);
  auto record = [&](std::size_t pos, const Symbol& sym) {
    TraceStep step;
    step.pos = pos;
    step.symbol = sym;
    step.frontier_size = run.frontier_size();
    step.max_bits = run.max_bits_frontier();
    trace.max_frontier = std::max(trace.max_frontier, step.frontier_size);
    trace.max_bits = std::max(trace.max_bits, step.max_bits);
    trace.steps.push_back(std::move(step));
  };
  record(0, kLeftEndmarker);
  for (std::size_t i = 0; i < w.size(); ++i) {
    run.step(w[i]);
    record(i + 1, w[i]);
  }
  trace.verdict = run.finish();
  record(w.size() + 1, kRightEndmarker);
  return trace;
}

RunTrace run_counter_machine(const CounterMachine& m, const Word& w) {
  RunTrace trace;
  std::vector<int> tape = tape_ids(m.core, w);
  int state = m.core.initial;
  std::vector<long long> counters(m.k, 0);
  trace.max_bits = 1;
  for (std::size_t pos = 0; pos < tape.size(); ++pos) {
    int sid = tape[pos];
    const CounterArrow* a = m.arrow_for(state, sid, m.theta_key(counters));
    TraceStep step;
    step.pos = pos;
    step.symbol = m.core.symbol_name(sid);
    if (a == nullptr) {
      bool endmarker = sid >= static_cast<int>(m.core.alphabet.size());
      if (!endmarker) {
        step.state = state;
        step.counters = counters;
        step.undefined = true;
        step.max_bits = counter_bits(counters);
        trace.steps.push_back(std::move(step));
        trace.undefined_hit = true;
        trace.undefined_step = pos;
        trace.verdict = Verdict::Reject;
        trace.diagnostic = "undefined transition at step " + std::to_string(pos);
        return trace;
      }
      // Omitted endmarker row: zero increments, state unchanged.
    } else {
      for (int i = 0; i < m.k; ++i) counters[i] += a->inc[i];
      state = a->target;
    }
    step.state = state;
    step.counters = counters;
    step.max_bits = counter_bits(counters);
    trace.max_bits = std::max(trace.max_bits, step.max_bits);
    trace.steps.push_back(std::move(step));
  }
  bool ok = m.core.accepting[state];
  if (ok && m.blind) {
    ok = std::all_of(counters.begin(), counters.end(),
                     [](long long c) { return c == 0; });
  }
  trace.verdict = ok ? Verdict::Accept : Verdict::Reject;
  return trace;
}

PauseClosure pause_closure(const MultiplyAutomaton& m, int state, int sym_id) {
  PauseClosure c;
  c.exit_state = state;
  std::vector<bool> visited(m.core.num_states(), false);
  int cur = state;
  bool endmarker = sym_id >= static_cast<int>(m.core.alphabet.size());
  while (true) {
    const auto& a = m.arrow_for(cur, sym_id, Omega::Eq);
    if (!a) {
      if (endmarker) {
        c.exit_state = cur;  // default: move right, multiplier 1
        return c;
      }
      c.defined = false;
      return c;
    }
    c.product *= a->gamma;
    if (a->move_right) {
      c.exit_state = a->target;
      return c;
    }
    cur = a->target;
    if (visited[cur]) {
      c.loops = true;
      return c;
    }
    visited[cur] = true;
  }
}

namespace {

RunTrace run_famw_closures(const MultiplyAutomaton& m, const Word& w) {
  RunTrace trace;
  std::vector<int> tape = tape_ids(m.core, w);
  int state = m.core.initial;
  Rational reg = 1;
  trace.max_bits = 1;
  for (std::size_t pos = 0; pos < tape.size(); ++pos) {
    int sid = tape[pos];
    PauseClosure c = pause_closure(m, state, sid);
    TraceStep step;
    step.pos = pos;
    step.symbol = m.core.symbol_name(sid);
    if (!c.defined || c.loops) {
      step.state = state;
      step.reg = reg;
      step.undefined = !c.defined;
      step.max_bits = reg.bits();
      trace.steps.push_back(std::move(step));
      trace.undefined_hit = !c.defined;
      trace.undefined_step = pos;
      trace.verdict = Verdict::Reject;
      trace.diagnostic = c.loops
                             ? "head pauses forever at step " + std::to_string(pos)
                             : "undefined transition at step " + std::to_string(pos);
      return trace;
    }
    reg *= c.product;
    state = c.exit_state;
    step.state = state;
    step.reg = reg;
    step.max_bits = reg.bits();
    trace.max_bits = std::max(trace.max_bits, step.max_bits);
    trace.steps.push_back(std::move(step));
  }
  trace.verdict = (m.core.accepting[state] && reg.is_one()) ? Verdict::Accept
                                                            : Verdict::Reject;
  return trace;
}

}  // namespace

RunTrace run_multiply_automaton(const MultiplyAutomaton& m, const Word& w,
                                std::size_t step_budget) {
  if (!m.with_equality) return run_famw_closures(m, w);

  RunTrace trace;
  std::vector<int> tape = tape_ids(m.core, w);
  if (step_budget == 0) step_budget = 10 * (w.size() + 2);
  int state = m.core.initial;
  Rational reg = 1;
  std::size_t head = 0;
  std::size_t steps = 0;
  trace.max_bits = 1;
  while (head < tape.size()) {
    if (steps == step_budget) {
      trace.verdict = Verdict::BudgetExhausted;
      trace.diagnostic = "step budget of " + std::to_string(step_budget) +
                         " exhausted at tape position " + std::to_string(head);
      return trace;
    }
    int sid = tape[head];
    Omega om = reg.is_one() ? Omega::Eq : Omega::Neq;
    const auto& a = m.arrow_for(state, sid, om);
    TraceStep step;
    step.pos = head;
    step.symbol = m.core.symbol_name(sid);
    if (!a) {
      bool endmarker = sid >= static_cast<int>(m.core.alphabet.size());
      if (endmarker) {
        ++head;  // default: move right, multiplier 1, state unchanged
      } else {
        step.state = state;
        step.reg = reg;
        step.undefined = true;
        step.max_bits = reg.bits();
        trace.steps.push_back(std::move(step));
        trace.undefined_hit = true;
        trace.undefined_step = steps;
        trace.verdict = Verdict::Reject;
        trace.diagnostic = "undefined transition at step " + std::to_string(steps);
        return trace;
      }
    } else {
      reg *= a->gamma;
      state = a->target;
      if (a->move_right) ++head;
    }
    ++steps;
    step.state = state;
    step.reg = reg;
    step.max_bits = reg.bits();
    trace.max_bits = std::max(trace.max_bits, step.max_bits);
    trace.steps.push_back(std::move(step));
  }
  trace.verdict = (m.core.accepting[state] && reg.is_one()) ? Verdict::Accept
                                                            : Verdict::Reject;
  return trace;
}

Rational eval_tufa(const Tufa& g, const Word& w) {
  RowVector u = g.initial_vector;
  for (const auto& s : w) {
    int sid = g.symbol_id(s);
    if (sid < 0) {
      throw InputError("symbol '" + s + "' is not in the automaton alphabet");
    }
    u = u * g.matrices[sid];
  }
  return dot(u, g.final_vector);
}

bool tufa_member(const Tufa& g, const Rational& lambda, const Word& w) {
  return eval_tufa(g, w) == lambda;
}

Verdict machine_verdict(const AnyMachine& m, const Rational& tufa_lambda,
                        const Word& w, const RunLimits& limits) {
  if (const auto* va = std::get_if<VectorAutomaton>(&m)) {
    if (va->deterministic) return run_vector_automaton(*va, w).verdict;
    return run_vector_automaton_nondet(*va, w, limits.frontier_cap,
                                       limits.dedupe)
        .verdict;
  }
  if (const auto* cm = std::get_if<CounterMachine>(&m)) {
    return run_counter_machine(*cm, w).verdict;
  }
  if (const auto* fa = std::get_if<MultiplyAutomaton>(&m)) {
    return run_multiply_automaton(*fa, w, limits.step_budget).verdict;
  }
  return tufa_member(std::get<Tufa>(m), tufa_lambda, w) ? Verdict::Accept
                                                        : Verdict::Reject;
}

}  // namespace rtva
