#include "rtva/machine.hpp"

#include <algorithm>

#include "rtva/errors.hpp"

namespace rtva {

std::string word_str(const Word& w) {
  std::string s;
  for (const auto& sym : w) s += sym;
  return s;
}

Word tokenize(const std::string& text, const std::vector<Symbol>& alphabet) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    for (const auto& sym : alphabet) {
      if (sym.size() > best && text.compare(pos, sym.size(), sym) == 0) {
        best = sym.size();
      }
    }
    if (best == 0) {
      throw InputError("no alphabet symbol matches input at position " +
                       std::to_string(pos) + " of '" + text + "'");
    }
    w.push_back(text.substr(pos, best));
    pos += best;
  }
  return w;
}

int MachineCore::add_state(const std::string& name, bool accept) {
  states.push_back(name);
  accepting.push_back(accept);
  return static_cast<int>(states.size()) - 1;
}

int MachineCore::state_index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int MachineCore::symbol_id(const Symbol& s) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == s) return static_cast<int>(i);
  }
  if (s == kLeftEndmarker) return left_id();
  if (s == kRightEndmarker) return right_id();
  return -1;
}

const Symbol& MachineCore::symbol_name(int id) const {
  if (id == left_id()) return kLeftEndmarker;
  if (id == right_id()) return kRightEndmarker;
  return alphabet[id];
}

void MachineCore::validate() const {
  if (states.empty()) throw ValidationError("machine has no states");
  if (accepting.size() != states.size()) {
    throw ValidationError("accept flags do not match the state count");
  }
  if (initial < 0 || initial >= num_states()) {
    throw ValidationError("initial state out of range");
  }
  for (const auto& s : alphabet) {
    if (s == kLeftEndmarker || s == kRightEndmarker) {
      throw ValidationError("endmarkers are reserved and cannot be alphabet symbols");
    }
    if (s.empty()) throw ValidationError("empty alphabet symbol");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
      if (alphabet[i] == alphabet[j]) {
        throw ValidationError("duplicate alphabet symbol '" + alphabet[i] + "'");
      }
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (states[i] == states[j]) {
        throw ValidationError("duplicate state name '" + states[i] + "'");
      }
    }
  }
}

int MachineCore::add_unique_state(const std::string& base, bool accept) {
  std::string name = base;
  int suffix = 2;
  while (state_index(name) >= 0) {
    name = base + "-" + std::to_string(suffix++);
  }
  return add_state(name, accept);
}

void VectorAutomaton::ensure_sizes() {
  arrows.resize(core.states.size());
  for (auto& by_sym : arrows) by_sym.resize(core.num_symbol_ids());
  if (check.size() < core.states.size()) {
    check.resize(core.states.size(), CheckSpec{1, accept_value});
  }
}

void VectorAutomaton::add_arrow(int from, const Symbol& sym, Omega om, int to,
                                const SquareMatrix& m) {
  ensure_sizes();
  int sid = core.symbol_id(sym);
  if (sid < 0) throw ValidationError("unknown symbol '" + sym + "'");
  int slot = blind ? 0 : static_cast<int>(om);
  arrows[from][sid][slot].push_back(VectorArrow{to, m});
}

void VectorAutomaton::add_arrow_any(int from, const Symbol& sym, int to,
                                    const SquareMatrix& m) {
  add_arrow(from, sym, Omega::Eq, to, m);
  add_arrow(from, sym, Omega::Neq, to, m);
}

void VectorAutomaton::add_arrow_blind(int from, const Symbol& sym, int to,
                                      const SquareMatrix& m) {
  add_arrow(from, sym, Omega::Eq, to, m);
}

const std::vector<VectorArrow>& VectorAutomaton::arrows_for(int state,
                                                            int sym_id,
                                                            Omega om) const {
  static const std::vector<VectorArrow> empty;
  if (state < 0 || state >= static_cast<int>(arrows.size())) return empty;
  if (sym_id < 0 || sym_id >= static_cast<int>(arrows[state].size())) {
    return empty;
  }
  return arrows[state][sym_id][blind ? 0 : static_cast<int>(om)];
}

const CheckSpec& VectorAutomaton::check_for(int state) const {
  static const CheckSpec standard{};
  if (state < static_cast<int>(check.size())) return check[state];
  return standard;
}

void VectorAutomaton::validate() const {
  core.validate();
  if (dim < 1) throw ValidationError("vector dimension must be positive");
  if (initial_vector.dim() != dim) {
    throw ValidationError("initial vector dimension does not match dim");
  }
  if (!blind) {
    if (check.size() != core.states.size()) {
      throw ValidationError("check map must cover every state");
    }
    for (const auto& c : check) {
      if (c.entry < 1 || c.entry > dim) {
        throw ValidationError("check entry out of range");
      }
    }
  }
  for (std::size_t q = 0; q < arrows.size(); ++q) {
    for (const auto& by_om : arrows[q]) {
      for (const auto& opts : by_om) {
        if (deterministic && opts.size() > 1) {
          throw ValidationError("deterministic machine with a branching transition");
        }
        for (const auto& a : opts) {
          if (a.target < 0 || a.target >= core.num_states()) {
            throw ValidationError("transition target out of range");
          }
          if (a.matrix.dim() != dim) {
            throw ValidationError("transition matrix dimension does not match dim");
          }
        }
      }
    }
  }
}

void CounterMachine::ensure_sizes() {
  arrows.resize(core.states.size());
  for (auto& by_sym : arrows) by_sym.resize(core.num_symbol_ids());
}

void CounterMachine::add_arrow(int from, const Symbol& sym,
                               const std::string& theta, int to,
                               std::vector<int> inc) {
  ensure_sizes();
  int sid = core.symbol_id(sym);
  if (sid < 0) throw ValidationError("unknown symbol '" + sym + "'");
  arrows[from][sid][theta] = CounterArrow{to, std::move(inc)};
}

void CounterMachine::add_arrow_pattern(int from, const Symbol& sym,
                                       const std::string& pattern, int to,
                                       std::vector<int> inc) {
  std::vector<std::string> keys{""};
  for (char p : pattern) {
    std::vector<std::string> next;
    const char* options = (p == '*') ? "-0+" : nullptr;
    for (const auto& prefix : keys) {
      if (options) {
        for (const char* o = options; *o; ++o) next.push_back(prefix + *o);
      } else {
        next.push_back(prefix + p);
      }
    }
    keys = std::move(next);
  }
  for (const auto& key : keys) add_arrow(from, sym, key, to, inc);
}

const CounterArrow* CounterMachine::arrow_for(int state, int sym_id,
                                              const std::string& theta) const {
  if (state < 0 || state >= static_cast<int>(arrows.size())) return nullptr;
  if (sym_id < 0 || sym_id >= static_cast<int>(arrows[state].size())) {
    return nullptr;
  }
  auto it = arrows[state][sym_id].find(theta);
  return it == arrows[state][sym_id].end() ? nullptr : &it->second;
}

std::string CounterMachine::theta_key(
    const std::vector<long long>& counters) const {
  if (blind) return "";
  if (zero_test == ZeroTest::SimZero) {
    for (long long c : counters) {
      if (c != 0) return "N";
    }
    return "Z";
  }
  std::string key;
  key.reserve(counters.size());
  for (long long c : counters) key += c == 0 ? '0' : (c > 0 ? '+' : '-');
  return key;
}

void CounterMachine::validate() const {
  core.validate();
  if (k < 1) throw ValidationError("counter count must be positive");
  if (bound < 1) throw ValidationError("increment bound must be positive");
  for (const auto& by_sym : arrows) {
    for (const auto& by_theta : by_sym) {
      for (const auto& [theta, a] : by_theta) {
        if (a.target < 0 || a.target >= core.num_states()) {
          throw ValidationError("transition target out of range");
        }
        if (static_cast<int>(a.inc.size()) != k) {
          throw ValidationError("increment vector length does not match k");
        }
        for (int d : a.inc) {
          if (d > bound || d < -bound) {
            throw ValidationError("increment exceeds the machine bound");
          }
        }
        std::size_t want = blind ? 0 : (zero_test == ZeroTest::SimZero
                                            ? 1
                                            : static_cast<std::size_t>(k));
        if (theta.size() != want) {
          throw ValidationError("theta key '" + theta +
                                "' does not match the dispatch mode");
        }
      }
    }
  }
}

void MultiplyAutomaton::ensure_sizes() {
  arrows.resize(core.states.size());
  for (auto& by_sym : arrows) by_sym.resize(core.num_symbol_ids());
}

void MultiplyAutomaton::add_arrow(int from, const Symbol& sym, Omega om,
                                  int to, bool move_right,
                                  const Rational& gamma) {
  ensure_sizes();
  int sid = core.symbol_id(sym);
  if (sid < 0) throw ValidationError("unknown symbol '" + sym + "'");
  int slot = with_equality ? static_cast<int>(om) : 0;
  arrows[from][sid][slot] = MultiplyArrow{to, move_right, gamma};
}

void MultiplyAutomaton::add_arrow_any(int from, const Symbol& sym, int to,
                                      bool move_right, const Rational& gamma) {
  add_arrow(from, sym, Omega::Eq, to, move_right, gamma);
  add_arrow(from, sym, Omega::Neq, to, move_right, gamma);
}

void MultiplyAutomaton::add_arrow_noeq(int from, const Symbol& sym, int to,
                                       bool move_right,
                                       const Rational& gamma) {
  add_arrow(from, sym, Omega::Eq, to, move_right, gamma);
}

const std::optional<MultiplyArrow>& MultiplyAutomaton::arrow_for(
    int state, int sym_id, Omega om) const {
  static const std::optional<MultiplyArrow> none;
  if (state < 0 || state >= static_cast<int>(arrows.size())) return none;
  if (sym_id < 0 || sym_id >= static_cast<int>(arrows[state].size())) {
    return none;
  }
  return arrows[state][sym_id][with_equality ? static_cast<int>(om) : 0];
}

void MultiplyAutomaton::validate() const {
  core.validate();
  for (const auto& by_sym : arrows) {
    for (const auto& by_om : by_sym) {
      for (const auto& a : by_om) {
        if (!a) continue;
        if (a->target < 0 || a->target >= core.num_states()) {
          throw ValidationError("transition target out of range");
        }
      }
    }
  }
}

int Tufa::symbol_id(const Symbol& s) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == s) return static_cast<int>(i);
  }
  return -1;
}

void Tufa::validate() const {
  if (n < 1) throw ValidationError("state count must be positive");
  if (matrices.size() != alphabet.size()) {
    throw ValidationError("one matrix required per alphabet symbol");
  }
  for (const auto& m : matrices) {
    if (m.dim() != n) throw ValidationError("matrix dimension does not match n");
  }
  if (initial_vector.dim() != n || final_vector.dim() != n) {
    throw ValidationError("vector length does not match n");
  }
}

std::string machine_kind(const AnyMachine& m) {
  if (const auto* va = std::get_if<VectorAutomaton>(&m)) {
    if (va->deterministic) return va->blind ? "dbva" : "dva";
    return va->blind ? "nbva" : "nva";
  }
  if (std::holds_alternative<CounterMachine>(m)) return "counter";
  if (const auto* fa = std::get_if<MultiplyAutomaton>(&m)) {
    return fa->with_equality ? "fam" : "famw";
  }
  return "tufa";
}

const std::vector<Symbol>& machine_alphabet(const AnyMachine& m) {
  if (const auto* va = std::get_if<VectorAutomaton>(&m)) return va->core.alphabet;
  if (const auto* cm = std::get_if<CounterMachine>(&m)) return cm->core.alphabet;
  if (const auto* fa = std::get_if<MultiplyAutomaton>(&m)) return fa->core.alphabet;
  return std::get<Tufa>(m).alphabet;
}

void validate_machine(const AnyMachine& m) {
  std::visit([](const auto& mm) { mm.validate(); }, m);
}

}  // namespace rtva
