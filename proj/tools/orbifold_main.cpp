#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orbifold/cli/commands.hpp"
#include "orbifold/expression.hpp"

using namespace orbifold::cli;

namespace {

struct Common {
  std::string spec_path;
  bool json = false;
  bool graded_t = false;
  std::size_t max_group_order = 10000;
  int cyclotomic_order = 0;
};

int emit(const CommandResult& r, bool json) {
  if (json)
    std::cout << r.json.dump(2) << "\n";
  else
    std::cout << r.text;
  return r.exit_code;
}

int fail(const std::string& command, const std::string& kind, const std::string& message, bool json, int code) {
  if (json)
    std::cout << error_json(command, kind, message).dump(2) << "\n";
  else
    std::cerr << "orbifold " << command << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld orbifold algebra PBW engine"};
  app.require_subcommand(1);
  Common opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_flag("--graded-t", opt.graded_t, "Use the t-graded relations");
  app.add_option("--max-group-order", opt.max_group_order, "Cap on the generated group order")->check(CLI::PositiveNumber);
  app.add_option("--cyclotomic-order", opt.cyclotomic_order, "Override the coefficient field Q(zeta_N)")
      ->check(CLI::PositiveNumber);

  std::string expr, lhs, rhs;
  int p = 2, q = 1;
  auto* check = app.add_subcommand("check", "Check the PBW conditions and the overlap oracle");
  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression");
  auto* multiply = app.add_subcommand("multiply", "Product of two expressions in the PBW basis");
  auto* solve_linear = app.add_subcommand("solve-linear", "Solve for kappa^L satisfying (i) and (ii)");
  auto* solve_constant = app.add_subcommand("solve-constant", "Solve for kappa^C given the spec's kappa^L");
  auto* cohomology = app.add_subcommand("cohomology", "Dimensions of invariant cohomology representatives");
  for (auto* sub : {check, reduce, multiply, solve_linear, solve_constant, cohomology}) {
    sub->add_option("spec", opt.spec_path, "Spec file")->required();
    sub->fallthrough();
  }
  reduce->add_option("expression", expr)->required();
  multiply->add_option("lhs", lhs)->required();
  multiply->add_option("rhs", rhs)->required();
  cohomology->add_option("-p,--degree", p, "Cohomological degree p")->default_val(2);
  cohomology->add_option("-q,--poly-degree", q, "Polynomial degree bound q")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    SpecOptions sopts;
    sopts.max_group_order = opt.max_group_order;
    if (opt.cyclotomic_order > 0) sopts.cyclotomic_order = opt.cyclotomic_order;
    ProblemSpec spec = load_spec(opt.spec_path, sopts);
    CommandResult r;
    if (sub == check)
      r = cmd_check(spec);
    else if (sub == reduce)
      r = cmd_reduce(spec, expr, opt.graded_t);
    else if (sub == multiply)
      r = cmd_multiply(spec, lhs, rhs, opt.graded_t);
    else if (sub == solve_linear)
      r = cmd_solve(spec, SolveStage::Linear);
    else if (sub == solve_constant)
      r = cmd_solve(spec, SolveStage::Constant);
    else
      r = cmd_cohomology(spec, p, q);
    return emit(r, opt.json);
  } catch (const InputError& e) {
    return fail(name, "input", e.what(), opt.json, kInputError);
  } catch (const orbifold::ParseError& e) {
    return fail(name, "input", e.what(), opt.json, kInputError);
  } catch (const std::exception& e) {
    return fail(name, "internal", e.what(), opt.json, kInternalError);
  }
}
