#include "orbifold/cli/commands.hpp"

#include <iomanip>
#include <sstream>

#include "orbifold/cohomology.hpp"
#include "orbifold/expression.hpp"
#include "orbifold/rewrite.hpp"
#include "orbifold/solver.hpp"

namespace orbifold::cli {

namespace {

constexpr std::size_t kMaxReported = 10;

Json witness_json(const ProblemSpec& spec, const Witness& w) {
  const Group& G = *spec.group;
  Json j;
  j["condition"] = condition_label(w.condition);
  j["group_element"] = G.word(w.g);
  j["conjugator"] = w.h ? Json(G.word(*w.h)) : Json(nullptr);
  j["indices"] = w.indices;
  Json names = Json::array();
  for (auto i : w.indices) names.push_back(spec.basis_names[i]);
  j["vectors"] = std::move(names);
  j["residue"] = w.residue.to_string(spec.basis_names);
  return j;
}

Json pbw_json(const ProblemSpec& spec, const PbwElement& x) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : x.terms()) {
    Json t;
    t["exponents"] = key.first;
    t["group_element"] = spec.group->word(key.second);
    Json cs = Json::array();
    for (const auto& [power, value] : coeff.terms()) cs.push_back({{"t_power", power}, {"value", value.to_string()}});
    t["coefficients"] = std::move(cs);
    terms.push_back(std::move(t));
  }
  return terms;
}

FreeElement parse_expression(const ProblemSpec& spec, const std::string& text) {
  try {
    return parse_free_element(text, *spec.group, spec.basis_names, spec.context());
  } catch (const ParseError& e) {
    throw InputError("expression '" + text + "': " + e.what());
  } catch (const std::domain_error& e) {
    throw InputError("expression '" + text + "': " + e.what());
  }
}

std::string pass_text(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

Json error_json(const std::string& command, const std::string& kind, const std::string& message) {
  Json j;
  j["command"] = command;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

CommandResult cmd_check(const ProblemSpec& spec) {
  const KappaParameter& kappa = *spec.kappa;
  ConditionReport report = check_conditions(kappa);
  Rewriter rw(kappa, false);
  OverlapResult overlap = rw.overlap_check(false);
  const bool agreement = report.passed() == overlap.confluent;

  CommandResult r;
  Json& j = r.json;
  j["command"] = "check";
  j["spec"] = spec.name;
  j["group_order"] = spec.group->order();
  j["dimension"] = spec.dimension;
  j["passed"] = report.passed();
  Json conds = Json::array();
  std::ostringstream text;
  text << "spec " << (spec.name.empty() ? "(unnamed)" : spec.name) << "  |G| = " << spec.group->order()
       << "  dim V = " << spec.dimension << "\n";
  text << std::left << std::setw(14) << "condition" << std::setw(8) << "result" << "failures\n";
  for (int c = 0; c < 4; ++c) {
    const ConditionResult& cr = report.conditions[c];
    Json cj;
    cj["label"] = condition_label(static_cast<Condition>(c));
    cj["passed"] = cr.passed;
    cj["failure_count"] = cr.failures.size();
    Json ws = Json::array();
    for (std::size_t k = 0; k < cr.failures.size() && k < kMaxReported; ++k) ws.push_back(witness_json(spec, cr.failures[k]));
    cj["witnesses"] = std::move(ws);
    conds.push_back(std::move(cj));
    text << std::setw(14) << condition_label(static_cast<Condition>(c)) << std::setw(8) << pass_text(cr.passed)
         << cr.failures.size() << "\n";
  }
  j["conditions"] = std::move(conds);

  Json oj;
  oj["confluent"] = overlap.confluent;
  oj["ambiguities_checked"] = overlap.ambiguities_checked;
  oj["failure_count"] = overlap.failures.size();
  Json fails = Json::array();
  for (std::size_t k = 0; k < overlap.failures.size() && k < kMaxReported; ++k) {
    const Ambiguity& a = overlap.failures[k];
    std::string word;
    for (Letter l : a.word) {
      if (!word.empty()) word += "*";
      word += is_group_letter(l) ? spec.group->word(-l) : spec.basis_names[l];
    }
    fails.push_back({{"word", word},
                     {"left", a.left.to_string(*spec.group, spec.basis_names)},
                     {"right", a.right.to_string(*spec.group, spec.basis_names)}});
  }
  oj["failures"] = std::move(fails);
  j["overlap"] = std::move(oj);
  j["agreement"] = agreement;
  text << std::setw(14) << "overlap" << std::setw(8) << (overlap.confluent ? "pass" : "FAIL")
       << overlap.failures.size() << " of " << overlap.ambiguities_checked << " ambiguities\n";

  std::vector<int> lsupp = kappa.linear_support();
  if (lsupp.empty() || (lsupp.size() == 1 && lsupp[0] == Group::identity())) {
    LieOrbifoldReport lie = check_lie_orbifold(kappa);
    j["lie_orbifold"] = lie.passed();
    j["lie_orbifold_failures"] = lie.failures;
    text << std::setw(14) << "lie orbifold" << std::setw(8) << pass_text(lie.passed()) << lie.failures.size() << "\n";
  } else {
    j["lie_orbifold"] = nullptr;
    j["lie_orbifold_failures"] = Json::array();
  }
  text << "agreement     " << (agreement ? "yes" : "NO") << "\n";
  if (const Witness* w = report.first_witness()) {
    text << "witness       " << condition_label(w->condition) << " at " << spec.group->word(w->g);
    if (w->h) text << " conjugated by " << spec.group->word(*w->h);
    text << " on (";
    for (std::size_t k = 0; k < w->indices.size(); ++k) text << (k ? ", " : "") << spec.basis_names[w->indices[k]];
    text << "): " << w->residue.to_string(spec.basis_names) << "\n";
  }

  r.exit_code = !agreement ? kInternalError : (report.passed() ? kPass : kConditionFailure);
  r.text = text.str();
  return r;
}

CommandResult cmd_reduce(const ProblemSpec& spec, const std::string& expression, bool graded_t) {
  FreeElement x = parse_expression(spec, expression);
  Rewriter rw(*spec.kappa, graded_t);
  PbwElement nf = rw.normal_form(x);
  CommandResult r;
  r.json["command"] = "reduce";
  r.json["input"] = expression;
  r.json["graded_t"] = graded_t;
  r.json["result"] = nf.to_string(*spec.group, spec.basis_names);
  r.json["terms"] = pbw_json(spec, nf);
  r.text = nf.to_string(*spec.group, spec.basis_names) + "\n";
  return r;
}

CommandResult cmd_multiply(const ProblemSpec& spec, const std::string& lhs, const std::string& rhs, bool graded_t) {
  FreeElement a = parse_expression(spec, lhs);
  FreeElement b = parse_expression(spec, rhs);
  Rewriter rw(*spec.kappa, graded_t);
  PbwElement prod = rw.multiply(rw.normal_form(a), rw.normal_form(b));
  CommandResult r;
  r.json["command"] = "multiply";
  r.json["input"] = {lhs, rhs};
  r.json["graded_t"] = graded_t;
  r.json["result"] = prod.to_string(*spec.group, spec.basis_names);
  r.json["terms"] = pbw_json(spec, prod);
  r.text = prod.to_string(*spec.group, spec.basis_names) + "\n";
  return r;
}

CommandResult cmd_solve(const ProblemSpec& spec, SolveStage stage) {
  ParameterSpace space;
  if (stage == SolveStage::Linear) {
    space = solve_linear_part(spec.group);
  } else {
    try {
      space = solve_constant_part(*spec.kappa);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  CommandResult r;
  Json& j = r.json;
  j["command"] = "solve";
  j["stage"] = stage == SolveStage::Linear ? "linear" : "constant";
  j["empty"] = space.empty();
  j["dimension"] = space.dimension();
  j["particular"] = space.particular ? serialize_kappa(*space.particular, spec.basis_names) : Json(nullptr);
  Json basis = Json::array();
  for (const auto& b : space.basis) basis.push_back(serialize_kappa(b, spec.basis_names));
  j["basis"] = std::move(basis);
  j["in_representative_space"] = space.in_representative_space;

  std::ostringstream text;
  text << (stage == SolveStage::Linear ? "linear" : "constant") << " stage: ";
  if (space.empty()) {
    text << "no solution\n";
  } else {
    text << "dimension " << space.dimension() << "\n";
    for (std::size_t k = 0; k < space.basis.size(); ++k) {
      text << "basis " << k + 1;
      if (k < space.in_representative_space.size())
        text << (space.in_representative_space[k] ? "  [in H^2]" : "  [not in H^2]");
      text << "\n" << serialize_kappa(space.basis[k], spec.basis_names).dump() << "\n";
    }
  }
  r.text = text.str();
  r.exit_code = space.empty() ? kConditionFailure : kPass;
  return r;
}

CommandResult cmd_cohomology(const ProblemSpec& spec, int p, int q) {
  if (p < 0 || p > 3) throw InputError("p must be in {0, 1, 2, 3}");
  if (q < 0 || q > 2) throw InputError("q must be in {0, 1, 2}");
  const Group& G = *spec.group;
  std::vector<RepresentativeSpace> by_degree;
  for (int d = 0; d <= q; ++d) by_degree.push_back(representative_space(spec.group, p, d, true));

  CommandResult r;
  Json& j = r.json;
  j["command"] = "cohomology";
  j["p"] = p;
  j["q"] = q;
  std::ostringstream text;
  text << "(H^" << p << ")^G, polynomial degree <= " << q << "\n";
  text << std::left << std::setw(14) << "class" << std::setw(6) << "size" << std::setw(7) << "codim" << "by degree\n";
  Json classes = Json::array();
  std::vector<std::size_t> totals(q + 1, 0);
  std::size_t total = 0;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    int rep = G.classes()[c].front();
    Json cj;
    cj["representative"] = G.word(rep);
    cj["size"] = G.classes()[c].size();
    cj["codim"] = G.codim(rep);
    Json degs = Json::array();
    std::size_t sum = 0;
    std::string deg_text;
    for (int d = 0; d <= q; ++d) {
      std::size_t v = by_degree[d].class_dimensions[c];
      degs.push_back(v);
      totals[d] += v;
      sum += v;
      deg_text += (d ? " " : "") + std::to_string(v);
    }
    total += sum;
    cj["dimensions_by_degree"] = std::move(degs);
    cj["dimension"] = sum;
    classes.push_back(std::move(cj));
    text << std::setw(14) << G.word(rep) << std::setw(6) << G.classes()[c].size() << std::setw(7) << G.codim(rep)
         << deg_text << "\n";
  }
  j["classes"] = std::move(classes);
  j["total_by_degree"] = totals;
  j["total"] = total;
  text << "total " << total << "\n";
  r.text = text.str();
  return r;
}

}  // namespace orbifold::cli
