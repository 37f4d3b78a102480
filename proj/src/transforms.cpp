#include "rtva/transforms.hpp"

#include <algorithm>
#include <set>

#include "rtva/errors.hpp"
#include "rtva/primes.hpp"
#include "rtva/run.hpp"

namespace rtva {
namespace {

// M extended with one spare row/column pair: the new coordinate is preserved
// and does not feed the others.
SquareMatrix block_extend(const SquareMatrix& m) {
  int k = m.dim();
  SquareMatrix out(k + 1);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) out.at(r, c) = m.at(r, c);
  }
  out.at(k, k) = 1;
  return out;
}

// The uniform check constant of m: every non-blind state must test entry 1
// against the same constant, and accept_value must match it.
Rational uniform_check_constant(const VectorAutomaton& m,
                                const std::string& who) {
  Rational c = m.accept_value;
  if (!m.blind) {
    for (int q = 0; q < m.core.num_states(); ++q) {
      const CheckSpec& spec = m.check_for(q);
      if (spec.entry != 1) {
        throw NotApplicableError(who +
                                 ": machine must watch entry 1 everywhere "
                                 "(apply normalize_check_entry first)");
      }
      if (spec.constant != c) {
        throw NotApplicableError(who +
                                 ": check constants and accept_value must "
                                 "all equal one value");
      }
    }
  }
  return c;
}

template <typename Fn>
void for_each_arrow(const VectorAutomaton& m, Fn&& fn) {
  for (int q = 0; q < static_cast<int>(m.arrows.size()); ++q) {
    for (int sid = 0; sid < static_cast<int>(m.arrows[q].size()); ++sid) {
      for (int om = 0; om < 2; ++om) {
        for (const VectorArrow& a : m.arrows[q][sid][om]) {
          fn(q, sid, static_cast<Omega>(om), a);
        }
      }
    }
  }
}

VectorAutomaton copy_without_arrows(const VectorAutomaton& m) {
  VectorAutomaton out = m;
  for (auto& by_sym : out.arrows) {
    for (auto& by_om : by_sym) {
      by_om[0].clear();
      by_om[1].clear();
    }
  }
  return out;
}

// A coordinate whose value provably never changes and starts nonzero:
// column j of every transition matrix must be the j-th unit column.
int invariant_nonzero_coordinate(const VectorAutomaton& v) {
  for (int j = 0; j < v.dim; ++j) {
    if (v.initial_vector[j].is_zero()) continue;
    bool ok = true;
    for_each_arrow(v, [&](int, int, Omega, const VectorArrow& a) {
      for (int r = 0; r < v.dim && ok; ++r) {
        const Rational& cell = a.matrix.at(r, j);
        if (r == j ? !cell.is_one() : !cell.is_zero()) ok = false;
      }
    });
    if (ok) return j;
  }
  return -1;
}

}  // namespace

VectorAutomaton normalize_check_entry(const VectorAutomaton& m) {
  if (m.blind) {
    throw NotApplicableError(
        "normalize_check_entry: blind machines have no mid-run checks");
  }
  std::vector<SquareMatrix> swaps;
  swaps.reserve(m.core.num_states());
  for (int q = 0; q < m.core.num_states(); ++q) {
    swaps.push_back(swap_matrix(m.check_for(q).entry, m.dim));
  }
  VectorAutomaton out = copy_without_arrows(m);
  out.initial_vector = m.initial_vector * swaps[m.core.initial];
  for (int q = 0; q < m.core.num_states(); ++q) {
    out.check[q] = CheckSpec{1, m.check_for(q).constant};
  }
  for_each_arrow(m, [&](int q, int sid, Omega om, const VectorArrow& a) {
    out.add_arrow(q, m.core.symbol_name(sid), om, a.target,
                  swaps[q] * a.matrix * swaps[a.target]);
  });
  return out;
}

VectorAutomaton normalize_check_value(const VectorAutomaton& m) {
  Rational c = uniform_check_constant(m, "normalize_check_value");
  int k = m.dim;
  SquareMatrix restore = elementary_matrix(k + 1, k + 1, c - Rational(1));
  SquareMatrix shift = elementary_matrix(k + 1, k + 1, Rational(1) - c);
  VectorAutomaton out = copy_without_arrows(m);
  out.dim = k + 1;
  std::vector<Rational> v0(m.initial_vector.entries());
  v0.push_back(1);
  out.initial_vector = RowVector(std::move(v0)) * shift;
  out.accept_value = 1;
  for (auto& spec : out.check) spec = CheckSpec{1, 1};
  for_each_arrow(m, [&](int q, int sid, Omega om, const VectorArrow& a) {
    out.add_arrow(q, m.core.symbol_name(sid), om, a.target,
                  restore * block_extend(a.matrix) * shift);
  });
  return out;
}

VectorAutomaton normalize_check_value_multiplicative(const VectorAutomaton& m) {
  Rational c =
      uniform_check_constant(m, "normalize_check_value_multiplicative");
  if (c.is_zero()) {
    throw NotApplicableError(
        "normalize_check_value_multiplicative: constant 0 cannot be scaled "
        "away (use normalize_check_value)");
  }
  SquareMatrix scale = elementary_matrix(1, m.dim, c);
  SquareMatrix unscale = elementary_matrix(1, m.dim, Rational(1) / c);
  VectorAutomaton out = copy_without_arrows(m);
  out.initial_vector = m.initial_vector * unscale;
  out.accept_value = 1;
  for (auto& spec : out.check) spec = CheckSpec{1, 1};
  for_each_arrow(m, [&](int q, int sid, Omega om, const VectorArrow& a) {
    out.add_arrow(q, m.core.symbol_name(sid), om, a.target,
                  scale * a.matrix * unscale);
  });
  return out;
}

CounterMachine dva1_to_counter_machine(const VectorAutomaton& m) {
  if (m.dim != 1) {
    throw NotApplicableError("dva1_to_counter_machine: dimension must be 1");
  }
  if (!m.deterministic) {
    throw NotApplicableError(
        "dva1_to_counter_machine: counter machines are deterministic");
  }
  Rational c = uniform_check_constant(m, "dva1_to_counter_machine");
  if (!c.is_one()) {
    throw NotApplicableError(
        "dva1_to_counter_machine: value tests must be against 1 (all "
        "counters zero)");
  }
  // Factor base: ascending union of the prime factors of every multiplier.
  std::set<long> base;
  int bound = 1;
  for_each_arrow(m, [&](int, int, Omega, const VectorArrow& a) {
    const Rational& mult = a.matrix.at(0, 0);
    if (mult.is_zero() || mult.sign() < 0) {
      throw NotApplicableError(
          "dva1_to_counter_machine: multiplier " + mult.str() +
          " is not representable by counters");
    }
    for (const auto& [p, e] : factorize(mult.num())) {
      base.insert(p);
      bound = std::max(bound, e);
    }
    for (const auto& [p, e] : factorize(mult.den())) {
      base.insert(p);
      bound = std::max(bound, e);
    }
  });
  std::vector<long> primes(base.begin(), base.end());
  CounterMachine out;
  out.core = m.core;
  out.blind = m.blind;
  out.zero_test = ZeroTest::SimZero;
  out.k = std::max<int>(1, primes.size());
  out.bound = bound;
  auto increments = [&](const Rational& mult) {
    std::vector<int> inc(out.k, 0);
    auto nums = factorize(mult.num());
    auto dens = factorize(mult.den());
    for (std::size_t i = 0; i < primes.size(); ++i) {
      int up = nums.count(primes[i]) ? nums[primes[i]] : 0;
      int down = dens.count(primes[i]) ? dens[primes[i]] : 0;
      inc[i] = up - down;
    }
    return inc;
  };
  for_each_arrow(m, [&](int q, int sid, Omega om, const VectorArrow& a) {
    if (sid == m.core.right_id() && !m.blind) return;  // folded below
    std::string theta = m.blind ? "" : (om == Omega::Eq ? "Z" : "N");
    out.add_arrow(q, m.core.symbol_name(sid), theta, a.target,
                  increments(a.matrix.at(0, 0)));
  });
  if (!m.blind) {
    // Counter machines accept by state alone, so the source's final value
    // test (value 1, i.e. all counters zero after the endmarker step) is
    // folded into the endmarker dispatch: finishes that would end with
    // nonzero counters in an accepting state are routed to a sink.
    int sink = -1;
    auto ensure_sink = [&] {
      if (sink < 0) sink = out.core.add_unique_state("nonzero-finish", false);
      return sink;
    };
    bool all_zero_inc_defaults = true;
    for (int q = 0; q < m.core.num_states(); ++q) {
      for (Omega om : {Omega::Eq, Omega::Neq}) {
        const auto& opts = m.arrows_for(q, m.core.right_id(), om);
        VectorArrow arrow = opts.empty()
                                ? VectorArrow{q, identity_matrix(1)}
                                : opts.front();
        std::vector<int> inc = increments(arrow.matrix.at(0, 0));
        bool zero_inc = std::all_of(inc.begin(), inc.end(),
                                    [](int d) { return d == 0; });
        std::string theta = om == Omega::Eq ? "Z" : "N";
        if (!m.core.accepting[arrow.target]) {
          out.add_arrow(q, kRightEndmarker, theta, arrow.target,
                        std::move(inc));
        } else if (om == Omega::Eq && zero_inc) {
          // Counters are zero and stay zero: accepting finish.
          out.add_arrow(q, kRightEndmarker, theta, arrow.target,
                        std::move(inc));
        } else if (zero_inc) {
          // Counters are nonzero and stay nonzero: rejecting finish.
          out.add_arrow(q, kRightEndmarker, theta, ensure_sink(),
                        std::move(inc));
        } else if (om == Omega::Eq) {
          // Zero counters made nonzero by the endmarker multiplier.
          out.add_arrow(q, kRightEndmarker, theta, ensure_sink(),
                        std::move(inc));
        } else {
          all_zero_inc_defaults = false;
        }
      }
    }
    if (!all_zero_inc_defaults) {
      throw NotApplicableError(
          "dva1_to_counter_machine: an endmarker multiplier other than 1 on "
          "a run that can end in an accept state with nonzero counters "
          "cannot be decided by the simultaneous-zero test");
    }
  }
  return out;
}

VectorAutomaton counter_machine_to_dva1(const CounterMachine& m) {
  if (!m.blind && m.zero_test != ZeroTest::SimZero) {
    throw NotApplicableError(
        "counter_machine_to_dva1: sign dispatch cannot be mirrored by a "
        "single value; only simultaneous-zero machines apply");
  }
  std::vector<long> primes = first_primes(m.k);
  VectorAutomaton out;
  out.core = m.core;
  out.deterministic = true;
  out.blind = m.blind;
  out.dim = 1;
  out.initial_vector = RowVector{1};
  out.accept_value = 1;
  out.check.assign(m.core.num_states(), CheckSpec{1, 1});
  for (int q = 0; q < static_cast<int>(m.arrows.size()); ++q) {
    for (int sid = 0; sid < static_cast<int>(m.arrows[q].size()); ++sid) {
      for (const auto& [theta, a] : m.arrows[q][sid]) {
        Rational mult(1);
        for (int i = 0; i < m.k; ++i) {
          if (a.inc[i] != 0) mult *= Rational(primes[i]).pow(a.inc[i]);
        }
        SquareMatrix mat(1);
        mat.at(0, 0) = mult;
        if (m.blind) {
          out.add_arrow_blind(q, m.core.symbol_name(sid), a.target, mat);
        } else {
          out.add_arrow(q, m.core.symbol_name(sid),
                        theta == "Z" ? Omega::Eq : Omega::Neq, a.target, mat);
        }
      }
    }
  }
  return out;
}

VectorAutomaton famw_to_rtdbva1(const MultiplyAutomaton& m) {
  if (m.with_equality) {
    throw NotApplicableError(
        "famw_to_rtdbva1: machines with the equality test feed the register "
        "back into control and cannot be closure-compiled");
  }
  VectorAutomaton out;
  out.core = m.core;
  out.deterministic = true;
  out.blind = true;
  out.dim = 1;
  out.initial_vector = RowVector{1};
  out.accept_value = 1;

  // First pass: find loops so the reject sink is only added when needed.
  bool any_loop = false;
  for (int q = 0; q < m.core.num_states() && !any_loop; ++q) {
    for (int sid = 0; sid < m.core.num_symbol_ids(); ++sid) {
      PauseClosure c = pause_closure(m, q, sid);
      if (c.defined && c.loops) {
        any_loop = true;
        break;
      }
    }
  }
  int dead = -1;
  if (any_loop) dead = out.core.add_unique_state("reject", false);

  SquareMatrix one(1);
  one.at(0, 0) = 1;
  for (int q = 0; q < m.core.num_states(); ++q) {
    for (int sid = 0; sid < m.core.num_symbol_ids(); ++sid) {
      bool endmarker = sid >= static_cast<int>(m.core.alphabet.size());
      bool explicit_arrow = m.arrow_for(q, sid, Omega::Eq).has_value();
      if (endmarker && !explicit_arrow) continue;  // keep the default row
      PauseClosure c = pause_closure(m, q, sid);
      if (!c.defined) continue;  // stays undefined: both machines reject
      if (c.loops) {
        out.add_arrow_blind(q, m.core.symbol_name(sid), dead, one);
      } else {
        SquareMatrix mat(1);
        mat.at(0, 0) = c.product;
        out.add_arrow_blind(q, m.core.symbol_name(sid), c.exit_state, mat);
      }
    }
  }
  if (any_loop) {
    for (const auto& sym : m.core.alphabet) {
      out.add_arrow_blind(dead, sym, dead, one);
    }
  }
  return out;
}

VectorAutomaton tufa_to_dbva(const Tufa& g, const Rational& lambda) {
  g.validate();
  bool augment = lambda.is_zero();
  int n = g.n + (augment ? 1 : 0);
  VectorAutomaton out;
  out.deterministic = true;
  out.blind = true;
  out.core.alphabet = g.alphabet;
  out.dim = n;
  out.accept_value = 1;
  int q = out.core.add_state("q", true);

  std::vector<Rational> v0 = g.initial_vector.entries();
  if (augment) v0.push_back(1);
  out.initial_vector = RowVector(std::move(v0));

  for (std::size_t s = 0; s < g.alphabet.size(); ++s) {
    SquareMatrix a = augment ? block_extend(g.matrices[s]) : g.matrices[s];
    out.add_arrow_blind(q, g.alphabet[s], q, a);
  }
  // Right-endmarker step: fold the final vector into column 1, scaled or
  // shifted so the acceptance test is "= 1".
  SquareMatrix fold(n);
  for (int i = 0; i < g.n; ++i) {
    fold.at(i, 0) =
        lambda.is_zero() || lambda.is_one() ? g.final_vector[i]
                                            : g.final_vector[i] / lambda;
  }
  if (augment) fold.at(g.n, 0) = 1;
  out.add_arrow_blind(q, kRightEndmarker, q, fold);
  return out;
}

Tufa dbva_to_tufa(const VectorAutomaton& m) {
  if (!m.blind || !m.deterministic) {
    throw NotApplicableError(
        "dbva_to_tufa: only blind deterministic machines apply");
  }
  VectorAutomaton work = m;
  if (m.accept_value.is_zero()) {
    // Every input symbol needs a defined row, or a dying branch would be
    // mistaken for an accepting zero.
    bool total = true;
    for (int q = 0; q < work.core.num_states() && total; ++q) {
      for (std::size_t s = 0; s < work.core.alphabet.size(); ++s) {
        if (work.arrows_for(q, static_cast<int>(s), Omega::Eq).empty()) {
          total = false;
          break;
        }
      }
    }
    if (!total) {
      VectorAutomaton completed = copy_without_arrows(work);
      int sink = completed.core.add_unique_state("sink", false);
      for_each_arrow(work, [&](int q, int sid, Omega om, const VectorArrow& a) {
        completed.add_arrow(q, work.core.symbol_name(sid), om, a.target,
                            a.matrix);
      });
      SquareMatrix id = identity_matrix(work.dim);
      for (int q = 0; q < completed.core.num_states(); ++q) {
        for (std::size_t s = 0; s < completed.core.alphabet.size(); ++s) {
          if (completed.arrows_for(q, static_cast<int>(s), Omega::Eq).empty()) {
            completed.add_arrow_blind(q, completed.core.alphabet[s], sink, id);
          }
        }
      }
      work = std::move(completed);
    }
    if (invariant_nonzero_coordinate(work) < 0) {
      VectorAutomaton widened = copy_without_arrows(work);
      widened.dim = work.dim + 1;
      std::vector<Rational> v0 = work.initial_vector.entries();
      v0.push_back(1);
      widened.initial_vector = RowVector(std::move(v0));
      for_each_arrow(work, [&](int q, int sid, Omega om, const VectorArrow& a) {
        widened.add_arrow(q, work.core.symbol_name(sid), om, a.target,
                          block_extend(a.matrix));
      });
      work = std::move(widened);
    }
  }

  const int k = work.dim;
  const int states = work.core.num_states();
  Tufa g;
  g.n = k * states;
  g.alphabet = work.core.alphabet;

  auto effective_arrow = [&](int q, int sid) -> std::optional<VectorArrow> {
    const auto& opts = work.arrows_for(q, sid, Omega::Eq);
    if (!opts.empty()) return opts.front();
    if (sid >= static_cast<int>(work.core.alphabet.size())) {
      return VectorArrow{q, identity_matrix(k)};
    }
    return std::nullopt;
  };

  for (std::size_t s = 0; s < g.alphabet.size(); ++s) {
    SquareMatrix a(g.n);
    for (int q = 0; q < states; ++q) {
      auto arrow = effective_arrow(q, static_cast<int>(s));
      if (!arrow) continue;
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
          a.at(q * k + r, arrow->target * k + c) = arrow->matrix.at(r, c);
        }
      }
    }
    g.matrices.push_back(std::move(a));
  }

  g.initial_vector = RowVector(g.n);
  auto first = effective_arrow(work.core.initial, work.core.left_id());
  RowVector folded = work.initial_vector * first->matrix;
  for (int c = 0; c < k; ++c) g.initial_vector[first->target * k + c] = folded[c];

  g.final_vector = RowVector(g.n);
  const int constant_coord =
      work.accept_value.is_zero() ? invariant_nonzero_coordinate(work) : -1;
  for (int q = 0; q < states; ++q) {
    auto arrow = effective_arrow(q, work.core.right_id());
    if (arrow && work.core.accepting[arrow->target]) {
      for (int r = 0; r < k; ++r) {
        g.final_vector[q * k + r] = arrow->matrix.at(r, 0);
      }
    } else if (work.accept_value.is_zero()) {
      g.final_vector[q * k + constant_coord] = 1;
    }
  }
  return g;
}

std::vector<std::string> transform_names() {
  return {"check-entry", "check-value", "check-value-mult",
          "counters",    "dva1",        "dbva",
          "tufa"};
}

AnyMachine apply_transform(const AnyMachine& m, const std::string& name,
                           const Rational& lambda) {
  if (name == "check-entry" || name == "check-value" ||
      name == "check-value-mult") {
    const auto* va = std::get_if<VectorAutomaton>(&m);
    if (!va) {
      throw NotApplicableError(name + ": input must be a vector automaton");
    }
    if (name == "check-entry") return normalize_check_entry(*va);
    if (name == "check-value") return normalize_check_value(*va);
    return normalize_check_value_multiplicative(*va);
  }
  if (name == "counters") {
    const auto* va = std::get_if<VectorAutomaton>(&m);
    if (!va) {
      throw NotApplicableError(
          "counters: input must be a one-dimensional vector automaton");
    }
    return dva1_to_counter_machine(*va);
  }
  if (name == "dva1") {
    const auto* cm = std::get_if<CounterMachine>(&m);
    if (!cm) throw NotApplicableError("dva1: input must be a counter machine");
    return counter_machine_to_dva1(*cm);
  }
  if (name == "dbva") {
    if (const auto* g = std::get_if<Tufa>(&m)) return tufa_to_dbva(*g, lambda);
    if (const auto* fa = std::get_if<MultiplyAutomaton>(&m)) {
      return famw_to_rtdbva1(*fa);
    }
    throw NotApplicableError(
        "dbva: input must be a generalized automaton or a multiply automaton "
        "without the equality test");
  }
  if (name == "tufa") {
    const auto* va = std::get_if<VectorAutomaton>(&m);
    if (!va) {
      throw NotApplicableError("tufa: input must be a blind vector automaton");
    }
    return dbva_to_tufa(*va);
  }
  throw InputError("unknown transform '" + name + "'");
}

}  // namespace rtva
