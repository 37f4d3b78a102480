#pragma once

#include <json.hpp>
#include <string>

#include "rtva/diffcheck.hpp"
#include "rtva/machine.hpp"
#include "rtva/run.hpp"

namespace rtva {

using Json = nlohmann::json;

/// One machine description document. `lambda` is meaningful for generalized
/// automata only (the membership cutpoint, default 1). `provenance` is
/// written by the convert command and carried verbatim otherwise.
struct MachineFile {
  AnyMachine machine;
  Rational tufa_lambda = 1;
  std::string name;
  Json provenance;
};

Json machine_to_json(const MachineFile& f);

/// Parses and validates; throws ParseError / ValidationError.
MachineFile machine_from_json(const Json& j);

MachineFile load_machine_file(const std::string& path);
void save_machine_file(const std::string& path, const MachineFile& f);

/// Stable content digest of a machine document (fnv1a over the canonical
/// dump), used to annotate transform outputs.
std::string machine_digest(const MachineFile& f);

Json trace_to_json(const RunTrace& t);
Json report_to_json(const TestReport& r);

}  // namespace rtva
