#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbifold/kappa.hpp"

namespace orbifold::cli {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecOptions {
  std::size_t max_group_order = 10000;
  std::optional<int> cyclotomic_order;  // overrides the spec and the pre-scan
};

struct ProblemSpec {
  std::string name;
  int cyclotomic_order = 1;
  std::size_t dimension = 0;
  std::vector<std::string> basis_names;
  std::vector<std::string> generator_names;
  std::vector<Matrix> generators;
  GroupPtr group;
  std::optional<KappaParameter> kappa;  // always set after parsing

  const CyclotomicContext& context() const { return CyclotomicContext::get(cyclotomic_order); }
};

ProblemSpec parse_spec(const Json& doc, const SpecOptions& options = {});
ProblemSpec load_spec(const std::string& path, const SpecOptions& options = {});
Json read_json_file(const std::string& path);

Json serialize_spec(const ProblemSpec& spec);
/// The "kappa" array of the serialization format.
Json serialize_kappa(const KappaParameter& kappa, const std::vector<std::string>& basis_names);
/// Canonical form of a spec document: defaults filled in, scalars and group
/// words rewritten canonically, kappa terms merged per (pair, element),
/// zero terms dropped, entries sorted.
Json normalize_spec(const Json& doc, const SpecOptions& options = {});

}  // namespace orbifold::cli
