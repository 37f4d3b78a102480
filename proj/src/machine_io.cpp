#include "rtva/machine_io.hpp"

#include <fstream>

#include "rtva/errors.hpp"

namespace rtva {
namespace {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" string");
}

Json vector_to_json(const RowVector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(rational_to_json(v[i]));
  return a;
}

RowVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a vector array");
  std::vector<Rational> xs;
  for (const auto& x : j) xs.push_back(rational_from_json(x));
  return RowVector(std::move(xs));
}

Json matrix_to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(rational_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SquareMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix array");
  int dim = static_cast<int>(j.size());
  SquareMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim) {
      throw ParseError("matrix rows must match the matrix dimension");
    }
    for (int c = 0; c < dim; ++c) m.at(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json core_to_json(const MachineCore& core) {
  Json j;
  j["states"] = core.states;
  j["q0"] = core.states[core.initial];
  Json acc = Json::array();
  for (int q = 0; q < core.num_states(); ++q) {
    if (core.accepting[q]) acc.push_back(core.states[q]);
  }
  j["accept"] = std::move(acc);
  j["alphabet"] = core.alphabet;
  return j;
}

MachineCore core_from_json(const Json& j) {
  MachineCore core;
  for (const auto& s : j.at("states")) core.add_state(s.get<std::string>());
  core.initial = core.state_index(j.at("q0").get<std::string>());
  if (core.initial < 0) throw ParseError("q0 is not a listed state");
  for (const auto& s : j.at("accept")) {
    int q = core.state_index(s.get<std::string>());
    if (q < 0) throw ParseError("accept state not listed");
    core.accepting[q] = true;
  }
  if (j.contains("alphabet")) {
    for (const auto& s : j.at("alphabet")) {
      core.alphabet.push_back(s.get<std::string>());
    }
  }
  return core;
}

Json vector_automaton_to_json(const VectorAutomaton& m) {
  Json j = core_to_json(m.core);
  j["kind"] = machine_kind(AnyMachine(m));
  j["dim"] = m.dim;
  j["initial_vector"] = vector_to_json(m.initial_vector);
  j["accept_value"] = rational_to_json(m.accept_value);
  if (!m.blind) {
    Json check;
    for (int q = 0; q < m.core.num_states(); ++q) {
      check[m.core.states[q]] = {
          {"entry", m.check_for(q).entry},
          {"constant", rational_to_json(m.check_for(q).constant)}};
    }
    j["check"] = std::move(check);
  }
  Json ts = Json::array();
  for (int q = 0; q < static_cast<int>(m.arrows.size()); ++q) {
    for (int sid = 0; sid < static_cast<int>(m.arrows[q].size()); ++sid) {
      for (int om = 0; om < (m.blind ? 1 : 2); ++om) {
        for (const auto& a : m.arrows[q][sid][om]) {
          Json t;
          t["from"] = m.core.states[q];
          t["symbol"] = m.core.symbol_name(sid);
          if (!m.blind) t["omega"] = om == 0 ? "eq" : "neq";
          t["to"] = m.core.states[a.target];
          t["matrix"] = matrix_to_json(a.matrix);
          ts.push_back(std::move(t));
        }
      }
    }
  }
  j["transitions"] = std::move(ts);
  return j;
}

VectorAutomaton vector_automaton_from_json(const Json& j,
                                           const std::string& kind) {
  VectorAutomaton m;
  m.deterministic = kind == "dva" || kind == "dbva";
  m.blind = kind == "dbva" || kind == "nbva";
  m.core = core_from_json(j);
  m.dim = j.at("dim").get<int>();
  m.initial_vector = vector_from_json(j.at("initial_vector"));
  if (j.contains("accept_value")) {
    m.accept_value = rational_from_json(j.at("accept_value"));
  }
  if (!m.blind) {
    m.check.assign(m.core.num_states(), CheckSpec{1, 1});
    if (j.contains("check")) {
      for (const auto& [name, spec] : j.at("check").items()) {
        int q = m.core.state_index(name);
        if (q < 0) throw ParseError("check entry for unknown state " + name);
        m.check[q] = CheckSpec{spec.at("entry").get<int>(),
                               rational_from_json(spec.at("constant"))};
      }
    }
  }
  for (const auto& t : j.at("transitions")) {
    int from = m.core.state_index(t.at("from").get<std::string>());
    int to = m.core.state_index(t.at("to").get<std::string>());
    if (from < 0 || to < 0) throw ParseError("transition names unknown state");
    SquareMatrix mat = matrix_from_json(t.at("matrix"));
    Symbol sym = t.at("symbol").get<std::string>();
    if (m.blind) {
      m.add_arrow_blind(from, sym, to, mat);
    } else {
      std::string om = t.at("omega").get<std::string>();
      if (om != "eq" && om != "neq") throw ParseError("omega must be eq or neq");
      m.add_arrow(from, sym, om == "eq" ? Omega::Eq : Omega::Neq, to, mat);
    }
  }
  return m;
}

Json counter_machine_to_json(const CounterMachine& m) {
  Json j = core_to_json(m.core);
  j["kind"] = "counter";
  j["k"] = m.k;
  j["bound"] = m.bound;
  j["blind"] = m.blind;
  if (!m.blind) {
    j["zero_test"] = m.zero_test == ZeroTest::Signs ? "signs" : "simzero";
  }
  Json ts = Json::array();
  for (int q = 0; q < static_cast<int>(m.arrows.size()); ++q) {
    for (int sid = 0; sid < static_cast<int>(m.arrows[q].size()); ++sid) {
      for (const auto& [theta, a] : m.arrows[q][sid]) {
        Json t;
        t["from"] = m.core.states[q];
        t["symbol"] = m.core.symbol_name(sid);
        if (!m.blind) t["theta"] = theta;
        t["to"] = m.core.states[a.target];
        t["inc"] = a.inc;
        ts.push_back(std::move(t));
      }
    }
  }
  j["transitions"] = std::move(ts);
  return j;
}

CounterMachine counter_machine_from_json(const Json& j) {
  CounterMachine m;
  m.core = core_from_json(j);
  m.k = j.at("k").get<int>();
  m.bound = j.value("bound", 1);
  m.blind = j.value("blind", false);
  if (!m.blind) {
    std::string zt = j.value("zero_test", "signs");
    if (zt != "signs" && zt != "simzero") {
      throw ParseError("zero_test must be signs or simzero");
    }
    m.zero_test = zt == "signs" ? ZeroTest::Signs : ZeroTest::SimZero;
  }
  for (const auto& t : j.at("transitions")) {
    int from = m.core.state_index(t.at("from").get<std::string>());
    int to = m.core.state_index(t.at("to").get<std::string>());
    if (from < 0 || to < 0) throw ParseError("transition names unknown state");
    std::vector<int> inc;
    for (const auto& d : t.at("inc")) inc.push_back(d.get<int>());
    std::string theta = m.blind ? "" : t.at("theta").get<std::string>();
    m.add_arrow(from, t.at("symbol").get<std::string>(), theta, to,
                std::move(inc));
  }
  return m;
}

Json multiply_automaton_to_json(const MultiplyAutomaton& m) {
  Json j = core_to_json(m.core);
  j["kind"] = m.with_equality ? "fam" : "famw";
  Json gs = Json::array();
  for (const auto& g : m.multipliers) gs.push_back(rational_to_json(g));
  j["multipliers"] = std::move(gs);
  Json ts = Json::array();
  for (int q = 0; q < static_cast<int>(m.arrows.size()); ++q) {
    for (int sid = 0; sid < static_cast<int>(m.arrows[q].size()); ++sid) {
      for (int om = 0; om < (m.with_equality ? 2 : 1); ++om) {
        const auto& a = m.arrows[q][sid][om];
        if (!a) continue;
        Json t;
        t["from"] = m.core.states[q];
        t["symbol"] = m.core.symbol_name(sid);
        if (m.with_equality) t["omega"] = om == 0 ? "eq" : "neq";
        t["to"] = m.core.states[a->target];
        t["move"] = a->move_right ? "right" : "stay";
        t["gamma"] = rational_to_json(a->gamma);
        ts.push_back(std::move(t));
      }
    }
  }
  j["transitions"] = std::move(ts);
  return j;
}

MultiplyAutomaton multiply_automaton_from_json(const Json& j,
                                               const std::string& kind) {
  MultiplyAutomaton m;
  m.with_equality = kind == "fam";
  m.core = core_from_json(j);
  if (j.contains("multipliers")) {
    for (const auto& g : j.at("multipliers")) {
      m.multipliers.push_back(rational_from_json(g));
    }
  }
  for (const auto& t : j.at("transitions")) {
    int from = m.core.state_index(t.at("from").get<std::string>());
    int to = m.core.state_index(t.at("to").get<std::string>());
    if (from < 0 || to < 0) throw ParseError("transition names unknown state");
    std::string move = t.at("move").get<std::string>();
    if (move != "right" && move != "stay") {
      throw ParseError("move must be right or stay");
    }
    Rational gamma = rational_from_json(t.at("gamma"));
    Symbol sym = t.at("symbol").get<std::string>();
    if (m.with_equality) {
      std::string om = t.at("omega").get<std::string>();
      m.add_arrow(from, sym, om == "eq" ? Omega::Eq : Omega::Neq, to,
                  move == "right", gamma);
    } else {
      m.add_arrow_noeq(from, sym, to, move == "right", gamma);
    }
  }
  return m;
}

Json tufa_to_json(const Tufa& g) {
  Json j;
  j["kind"] = "tufa";
  j["n"] = g.n;
  j["alphabet"] = g.alphabet;
  Json ms;
  for (std::size_t s = 0; s < g.alphabet.size(); ++s) {
    ms[g.alphabet[s]] = matrix_to_json(g.matrices[s]);
  }
  j["matrices"] = std::move(ms);
  j["initial_vector"] = vector_to_json(g.initial_vector);
  j["final_vector"] = vector_to_json(g.final_vector);
  return j;
}

Tufa tufa_from_json(const Json& j) {
  Tufa g;
  g.n = j.at("n").get<int>();
  for (const auto& s : j.at("alphabet")) {
    g.alphabet.push_back(s.get<std::string>());
  }
  for (const auto& s : g.alphabet) {
    g.matrices.push_back(matrix_from_json(j.at("matrices").at(s)));
  }
  g.initial_vector = vector_from_json(j.at("initial_vector"));
  g.final_vector = vector_from_json(j.at("final_vector"));
  return g;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Json machine_to_json(const MachineFile& f) {
  Json j;
  if (const auto* va = std::get_if<VectorAutomaton>(&f.machine)) {
    j = vector_automaton_to_json(*va);
  } else if (const auto* cm = std::get_if<CounterMachine>(&f.machine)) {
    j = counter_machine_to_json(*cm);
  } else if (const auto* fa = std::get_if<MultiplyAutomaton>(&f.machine)) {
    j = multiply_automaton_to_json(*fa);
  } else {
    j = tufa_to_json(std::get<Tufa>(f.machine));
    if (!f.tufa_lambda.is_one()) j["lambda"] = f.tufa_lambda.str();
  }
  if (!f.name.empty()) j["name"] = f.name;
  if (!f.provenance.is_null()) j["provenance"] = f.provenance;
  return j;
}

MachineFile machine_from_json(const Json& j) {
  MachineFile f;
  std::string kind;
  try {
    kind = j.at("kind").get<std::string>();
    if (kind == "dva" || kind == "dbva" || kind == "nva" || kind == "nbva") {
      f.machine = vector_automaton_from_json(j, kind);
    } else if (kind == "counter") {
      f.machine = counter_machine_from_json(j);
    } else if (kind == "fam" || kind == "famw") {
      f.machine = multiply_automaton_from_json(j, kind);
    } else if (kind == "tufa") {
      f.machine = tufa_from_json(j);
      if (j.contains("lambda")) {
        f.tufa_lambda = rational_from_json(j.at("lambda"));
      }
    } else {
      throw ParseError("unknown machine kind '" + kind + "'");
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed machine document: ") + e.what());
  }
  f.name = j.value("name", "");
  if (j.contains("provenance")) f.provenance = j.at("provenance");
  validate_machine(f.machine);
  return f;
}

MachineFile load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open machine file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return machine_from_json(j);
}

void save_machine_file(const std::string& path, const MachineFile& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write machine file '" + path + "'");
  out << machine_to_json(f).dump(2) << "\n";
}

std::string machine_digest(const MachineFile& f) {
  MachineFile content = f;
  content.name.clear();
  content.provenance = Json();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a(machine_to_json(content).dump())));
  return std::string("fnv1a:") + buf;
}

Json trace_to_json(const RunTrace& t) {
  Json j;
  j["verdict"] = verdict_str(t.verdict);
  j["max_frontier"] = t.max_frontier;
  j["max_bits"] = t.max_bits;
  if (!t.diagnostic.empty()) j["diagnostic"] = t.diagnostic;
  if (t.undefined_hit) j["undefined_step"] = t.undefined_step;
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json e;
    e["pos"] = s.pos;
    e["symbol"] = s.symbol;
    if (s.state >= 0) e["state"] = s.state;
    if (s.vector.dim() > 0) {
      Json v = Json::array();
      for (int i = 0; i < s.vector.dim(); ++i) v.push_back(s.vector[i].str());
      e["vector"] = std::move(v);
    }
    if (!s.counters.empty()) e["counters"] = s.counters;
    if (s.state >= 0 && s.counters.empty() && s.vector.dim() == 0) {
      e["register"] = s.reg.str();
    }
    e["frontier"] = s.frontier_size;
    e["max_bits"] = s.max_bits;
    if (s.undefined) e["undefined"] = true;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json report_to_json(const TestReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["reference"] = r.reference;
  j["word_source"] = r.word_source;
  j["words_tested"] = r.words_tested;
  j["clean"] = r.clean();
  if (r.counterexample) {
    j["counterexample"] = word_str(*r.counterexample);
    j["counterexample_note"] = r.counterexample_note;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace rtva
