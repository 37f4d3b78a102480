// Command-line front end: run machines on words, convert between models,
// evaluate generalized automata, certify against oracles, export the zoo.
//
// Exit codes: 0 accept/clean, 1 reject/counterexample, 2 usage or bad input,
// 3 resource limits.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "rtva/diffcheck.hpp"
#include "rtva/machine_io.hpp"
#include "rtva/primes.hpp"
#include "rtva/run.hpp"
#include "rtva/transforms.hpp"
#include "rtva/zoo.hpp"

namespace {

using namespace rtva;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Resolved {
  MachineFile file;
  std::optional<ZooEntry> zoo;  // set when addressed as zoo:<id>
};

Resolved resolve_machine(const std::string& spec, bool fidelity) {
  if (spec.rfind("zoo:", 0) == 0) {
    ZooEntry e = zoo_get(spec.substr(4), fidelity);
    MachineFile f{e.machine, e.tufa_lambda, e.id, Json()};
    return Resolved{std::move(f), std::move(e)};
  }
  return Resolved{load_machine_file(spec), std::nullopt};
}

void emit(const Json& j, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) throw Error("cannot write '" + output_path + "'");
    out << j.dump(2) << "\n";
  }
}

int cmd_run(const Resolved& r, const std::string& input, bool want_trace,
            std::size_t cap, std::size_t budget) {
  const AnyMachine& m = r.file.machine;
  Word w = tokenize(input, machine_alphabet(m));
  if (const auto* g = std::get_if<Tufa>(&m)) {
    Rational value = eval_tufa(*g, w);
    bool member = value == r.file.tufa_lambda;
    std::cout << (member ? "ACCEPT" : "REJECT") << "\n"
              << "value: " << value.str() << " (cutpoint "
              << r.file.tufa_lambda.str() << ")\n"
              << "steps: " << w.size() + 1 << "\n";
    return member ? kExitAccept : kExitReject;
  }
  RunTrace t;
  if (const auto* va = std::get_if<VectorAutomaton>(&m)) {
    t = va->deterministic ? run_vector_automaton(*va, w)
                          : run_vector_automaton_nondet(*va, w, cap);
  } else if (const auto* cm = std::get_if<CounterMachine>(&m)) {
    t = run_counter_machine(*cm, w);
  } else {
    t = run_multiply_automaton(std::get<MultiplyAutomaton>(m), w, budget);
  }
  std::cout << verdict_str(t.verdict) << "\n";
  if (!t.steps.empty()) {
    const TraceStep& last = t.steps.back();
    if (last.vector.dim() > 0) std::cout << "vector: " << last.vector.str() << "\n";
    if (!last.counters.empty()) {
      std::cout << "counters: [";
      for (std::size_t i = 0; i < last.counters.size(); ++i) {
        std::cout << (i ? ", " : "") << last.counters[i];
      }
      std::cout << "]\n";
    }
    if (std::holds_alternative<MultiplyAutomaton>(m)) {
      std::cout << "register: " << last.reg.str() << "\n";
    }
    if (std::holds_alternative<VectorAutomaton>(m) &&
        !std::get<VectorAutomaton>(m).deterministic) {
      std::cout << "final frontier: " << last.frontier_size << "\n";
    }
  }
  std::cout << "steps: " << t.steps.size() << "\n";
  if (!t.diagnostic.empty()) std::cout << "note: " << t.diagnostic << "\n";
  if (want_trace) std::cout << trace_to_json(t).dump(2) << "\n";
  switch (t.verdict) {
    case Verdict::Accept:
      return kExitAccept;
    case Verdict::Reject:
      return kExitReject;
    default:
      return kExitResource;
  }
}

int cmd_convert(const Resolved& r, const std::string& to,
                const std::string& lambda_text, const std::string& output) {
  Rational lambda = r.file.tufa_lambda;
  if (!lambda_text.empty()) lambda = Rational::parse(lambda_text);
  MachineFile out;
  out.machine = apply_transform(r.file.machine, to, lambda);
  if (const auto* va = std::get_if<VectorAutomaton>(&r.file.machine);
      va && to == "tufa") {
    out.tufa_lambda = va->accept_value;  // membership cutpoint of the result
  }
  if (!r.file.name.empty()) out.name = r.file.name + "-" + to;
  out.provenance = Json{{"transform", to},
                        {"source_digest", machine_digest(r.file)}};
  if (to == "counters") {
    const auto& cm = std::get<CounterMachine>(out.machine);
    Json primes = Json::array();
    for (long p : first_primes(cm.k)) primes.push_back(p);
    out.provenance["primes"] = std::move(primes);
  }
  emit(machine_to_json(out), output);
  return kExitAccept;
}

int cmd_eval(const Resolved& r, const std::string& input) {
  const auto* g = std::get_if<Tufa>(&r.file.machine);
  if (!g) throw InputError("eval expects a generalized finite automaton");
  std::cout << eval_tufa(*g, tokenize(input, g->alphabet)).str() << "\n";
  return kExitAccept;
}

int cmd_check(const Resolved& subject, const std::string& against,
              bool fidelity, std::size_t max_len, std::uint64_t random_count,
              std::uint64_t seed, std::size_t cap, std::size_t budget,
              const std::string& report_path) {
  RunLimits limits{cap, budget, true};
  RunnableMachine m{subject.file.machine, subject.file.tufa_lambda, limits,
                    subject.file.name.empty() ? "machine" : subject.file.name};
  const auto& alphabet = machine_alphabet(subject.file.machine);
  TestReport report;
  if (against == "oracle") {
    if (!subject.zoo) {
      throw InputError("--against oracle requires a zoo:<id> machine");
    }
    if (random_count > 0) {
      if (subject.zoo->id == "subsetsum-nbva3") {
        report = differential_test_words(
            m, subject.zoo->oracle, random_subset_sum_words(random_count, seed),
            std::to_string(random_count) + " structured instances, seed " +
                std::to_string(seed));
      } else {
        report = differential_test_sampled(m, subject.zoo->oracle, alphabet,
                                           max_len, random_count, seed);
      }
    } else {
      if (WordEnumerator::count(alphabet.size(), max_len) > 20'000'000ULL) {
        throw InputError(
            "exhaustive enumeration too large; use --random with --seed");
      }
      report = differential_test(m, subject.zoo->oracle, alphabet, max_len);
    }
  } else {
    Resolved other = resolve_machine(against, fidelity);
    RunnableMachine m2{other.file.machine, other.file.tufa_lambda, limits,
                       other.file.name.empty() ? "other" : other.file.name};
    if (random_count > 0) {
      WordSampler sampler(alphabet, max_len, seed);
      std::vector<Word> words;
      words.reserve(random_count);
      for (std::uint64_t i = 0; i < random_count; ++i) {
        words.push_back(sampler.next());
      }
      report = equivalence_test_words(m, m2, words,
                                      std::to_string(random_count) +
                                          " samples, seed " +
                                          std::to_string(seed));
    } else {
      if (WordEnumerator::count(alphabet.size(), max_len) > 20'000'000ULL) {
        throw InputError(
            "exhaustive enumeration too large; use --random with --seed");
      }
      report = equivalence_test(m, m2, alphabet, max_len);
    }
  }
  Json j = report_to_json(report);
  if (!report_path.empty()) emit(j, report_path);
  std::cout << j.dump(2) << "\n";
  return report.clean() ? kExitAccept : kExitReject;
}

int cmd_zoo_list() {
  for (const std::string& id : zoo_ids()) {
    ZooEntry e = zoo_get(id);
    std::cout << id << "  [" << machine_kind(e.machine) << "]  "
              << e.description << "\n";
  }
  return kExitAccept;
}

int cmd_zoo_export(const std::string& id, bool fidelity,
                   const std::string& output) {
  ZooEntry e = zoo_get(id, fidelity);
  MachineFile f{e.machine, e.tufa_lambda, e.id, Json()};
  if (!e.fidelity_notes.empty()) {
    f.provenance = Json{{"fidelity_notes", e.fidelity_notes},
                        {"fidelity_mode", fidelity}};
  }
  emit(machine_to_json(f), output);
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact simulators, conversions, and differential certification for "
      "real-time vector automata, multicounter machines, multiply automata, "
      "and generalized finite automata"};
  app.require_subcommand(1);

  std::string machine_spec, input, output, to, lambda_text, against, report_path;
  bool want_trace = false, fidelity = false;
  std::size_t cap = 1'000'000, budget = 0, max_len = 8;
  std::uint64_t random_count = 0, seed = 1;

  CLI::App* run = app.add_subcommand("run", "run a machine on an input word");
  run->add_option("machine", machine_spec, "machine file or zoo:<id>")
      ->required();
  run->add_option("--input", input, "input word (tokenized by the alphabet)");
  run->add_flag("--trace", want_trace, "dump the full run trace as JSON");
  run->add_flag("--fidelity", fidelity, "literal matrices for zoo machines");
  run->add_option("--cap", cap, "frontier cap for nondeterministic runs");
  run->add_option("--budget", budget,
                  "step budget for head-pausing runs (default 10*(|w|+2))");

  CLI::App* convert =
      app.add_subcommand("convert", "convert a machine to another model");
  convert->add_option("machine", machine_spec, "machine file or zoo:<id>")
      ->required();
  convert->add_option("--to", to, "one of: check-entry, check-value, "
                                  "check-value-mult, counters, dva1, dbva, tufa")
      ->required();
  convert->add_option("--lambda", lambda_text,
                      "cutpoint for generalized-automaton inputs");
  convert->add_option("-o,--output", output, "output path (default stdout)");
  convert->add_flag("--fidelity", fidelity, "literal matrices for zoo machines");

  CLI::App* eval =
      app.add_subcommand("eval", "exact acceptance value of a generalized automaton");
  eval->add_option("machine", machine_spec, "machine file or zoo:<id>")
      ->required();
  eval->add_option("--input", input, "input word");

  CLI::App* check = app.add_subcommand(
      "check", "differential certification against an oracle or a second machine");
  check->add_option("machine", machine_spec, "machine file or zoo:<id>")
      ->required();
  check->add_option("--against", against,
                    "'oracle' (zoo machines) or a second machine file/zoo id")
      ->required();
  check->add_option("--max-len", max_len, "exhaustive enumeration cutoff");
  check->add_option("--random", random_count,
                    "sample this many words instead of enumerating");
  check->add_option("--seed", seed, "sampler seed");
  check->add_option("--report", report_path, "also write the JSON report here");
  check->add_flag("--fidelity", fidelity, "literal matrices for zoo machines");
  check->add_option("--cap", cap, "frontier cap");
  check->add_option("--budget", budget, "step budget for head-pausing runs");

  CLI::App* zoo = app.add_subcommand("zoo", "the shipped machine collection");
  CLI::App* zoo_list = zoo->add_subcommand("list", "list the collection");
  CLI::App* zoo_export =
      zoo->add_subcommand("export", "write one machine as a JSON document");
  std::string zoo_id;
  zoo_export->add_option("id", zoo_id, "zoo id")->required();
  zoo_export->add_option("-o,--output", output, "output path (default stdout)");
  zoo_export->add_flag("--fidelity", fidelity, "literal matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(resolve_machine(machine_spec, fidelity), input, want_trace,
                     cap, budget);
    }
    if (convert->parsed()) {
      return cmd_convert(resolve_machine(machine_spec, fidelity), to,
                         lambda_text, output);
    }
    if (eval->parsed()) {
      return cmd_eval(resolve_machine(machine_spec, fidelity), input);
    }
    if (check->parsed()) {
      return cmd_check(resolve_machine(machine_spec, fidelity), against,
                       fidelity, max_len, random_count, seed, cap, budget,
                       report_path);
    }
    if (zoo->parsed()) {
      if (zoo_list->parsed()) return cmd_zoo_list();
      if (zoo_export->parsed()) return cmd_zoo_export(zoo_id, fidelity, output);
      std::cerr << "zoo requires a subcommand (list or export)\n";
      return kExitUsage;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
