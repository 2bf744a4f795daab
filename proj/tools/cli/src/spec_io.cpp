#include "orbifold/cli/spec_io.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "orbifold/expression.hpp"
#include "orbifold/polynomial.hpp"

namespace orbifold::cli {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string scalar_text(const Json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InputError(where + ": expected a scalar expression string");
}

Scalar scalar_of(const Json& value, const CyclotomicContext& ctx, const std::string& where) {
  std::string text = scalar_text(value, where);
  try {
    return parse_scalar(text, ctx);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<std::string> string_list(const Json& value, const char* key) {
  if (!value.is_array()) throw InputError(std::string(key) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : value) {
    if (!s.is_string()) throw InputError(std::string(key) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// Fields shared by parse_spec and normalize_spec.
struct Header {
  std::string name;
  int order = 1;
  std::size_t n = 0;
  std::vector<std::string> basis_names;
  std::vector<std::string> generator_names;
  std::vector<Matrix> generators;
  GroupPtr group;
};

Header read_header(const Json& doc, const SpecOptions& options) {
  if (!doc.is_object()) throw InputError("spec must be a JSON object");
  Header h;
  h.name = doc.value("name", std::string());
  const Json& dim = require(doc, "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 64)
    throw InputError("dimension must be an integer in [1, 64]");
  h.n = dim.get<std::size_t>();

  if (options.cyclotomic_order) {
    h.order = *options.cyclotomic_order;
  } else if (doc.contains("cyclotomic_order")) {
    const Json& c = doc.at("cyclotomic_order");
    if (!c.is_number_integer()) throw InputError("cyclotomic_order must be an integer");
    h.order = c.get<int>();
  } else {
    h.order = required_cyclotomic_order(doc.dump());
  }
  if (h.order < 1 || h.order > 10000) throw InputError("cyclotomic_order out of range");
  const CyclotomicContext& ctx = CyclotomicContext::get(h.order);

  h.basis_names = doc.contains("basis_names") ? string_list(doc.at("basis_names"), "basis_names")
                                              : default_basis_names(h.n);
  if (h.basis_names.size() != h.n) throw InputError("basis_names must have one entry per dimension");

  const Json& gens = require(doc, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array of matrices");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Json& rows = gens[k];
    std::string where = "generator " + std::to_string(k + 1);
    if (!rows.is_array() || rows.size() < h.n) throw InputError(where + ": expected a square matrix of size >= dimension");
    const std::size_t m = rows.size();
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!rows[i].is_array() || rows[i].size() != m) throw InputError(where + ": matrix is not square");
      for (std::size_t j = 0; j < m; ++j) a(i, j) = scalar_of(rows[i][j], ctx, where);
    }
    h.generators.push_back(std::move(a));
  }
  if (doc.contains("generator_names")) {
    h.generator_names = string_list(doc.at("generator_names"), "generator_names");
    if (h.generator_names.size() != h.generators.size())
      throw InputError("generator_names must have one entry per generator");
  } else {
    for (std::size_t k = 0; k < h.generators.size(); ++k) h.generator_names.push_back("g" + std::to_string(k + 1));
  }

  GroupOptions gopts;
  gopts.max_order = options.max_group_order;
  gopts.generator_names = h.generator_names;
  try {
    h.group = generate_group(h.generators, h.n, gopts);
  } catch (const GroupTooLarge& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return h;
}

// kappa terms accumulated per (pair, element), independently of KappaParameter.
using TermMap = std::map<std::pair<std::pair<std::size_t, std::size_t>, int>, std::pair<Scalar, Vector>>;

TermMap read_terms(const Json& doc, const Header& h) {
  TermMap out;
  if (!doc.contains("kappa")) return out;
  const Json& entries = doc.at("kappa");
  if (!entries.is_array()) throw InputError("kappa must be an array");
  const CyclotomicContext& ctx = CyclotomicContext::get(h.order);
  for (const auto& entry : entries) {
    const Json& pair = require(entry, "pair");
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw InputError("kappa pair must be [i, j]");
    long long i = pair[0].get<long long>(), j = pair[1].get<long long>();
    if (i < 0 || j < 0 || i >= static_cast<long long>(h.n) || j >= static_cast<long long>(h.n))
      throw InputError("kappa pair index out of range");
    if (i >= j) throw InputError("kappa pair must satisfy i < j");
    std::string where = "kappa[" + std::to_string(i) + "," + std::to_string(j) + "]";
    const Json& terms = require(entry, "terms");
    if (!terms.is_array()) throw InputError(where + ": terms must be an array");
    for (const auto& term : terms) {
      const Json& word = require(term, "group_word");
      if (!word.is_string()) throw InputError(where + ": group_word must be a string");
      int g = 0;
      try {
        g = h.group->parse_word(word.get<std::string>());
      } catch (const ParseError& e) {
        throw InputError(where + ": " + e.what());
      }
      Scalar c = term.contains("constant") ? scalar_of(term.at("constant"), ctx, where) : Scalar();
      Vector lin(h.n);
      if (term.contains("linear")) {
        const Json& l = term.at("linear");
        if (!l.is_array() || l.size() != h.n) throw InputError(where + ": linear must have one entry per dimension");
        for (std::size_t k = 0; k < h.n; ++k) lin[k] = scalar_of(l[k], ctx, where);
      }
      auto key = std::make_pair(std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), g);
      auto [it, inserted] = out.try_emplace(key, Scalar(), Vector(h.n));
      it->second.first += c;
      it->second.second = it->second.second + lin;
    }
  }
  return out;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json term_json(const Group& G, int g, const Scalar& c, const Vector& lin) {
  Json t;
  t["group_word"] = G.word(g);
  t["constant"] = c.to_string();
  Json l = Json::array();
  for (const auto& s : lin) l.push_back(s.to_string());
  t["linear"] = std::move(l);
  return t;
}

Json header_json(const Header& h) {
  Json out;
  out["name"] = h.name;
  out["cyclotomic_order"] = h.order;
  out["dimension"] = h.n;
  out["basis_names"] = h.basis_names;
  out["generator_names"] = h.generator_names;
  Json gens = Json::array();
  for (const auto& m : h.generators) gens.push_back(matrix_json(m));
  out["generators"] = std::move(gens);
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

ProblemSpec parse_spec(const Json& doc, const SpecOptions& options) {
  Header h = read_header(doc, options);
  TermMap terms = read_terms(doc, h);
  ProblemSpec spec;
  spec.name = h.name;
  spec.cyclotomic_order = h.order;
  spec.dimension = h.n;
  spec.basis_names = h.basis_names;
  spec.generator_names = h.generator_names;
  spec.generators = h.generators;
  spec.group = h.group;
  KappaParameter kappa(h.group);
  for (const auto& [key, value] : terms) kappa.add(key.second, key.first.first, key.first.second, value.first, value.second);
  spec.kappa = std::move(kappa);
  return spec;
}

ProblemSpec load_spec(const std::string& path, const SpecOptions& options) {
  return parse_spec(read_json_file(path), options);
}

Json serialize_kappa(const KappaParameter& kappa, const std::vector<std::string>&) {
  const Group& G = kappa.group();
  Json out = Json::array();
  for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
    auto [i, j] = kappa.pair_at(p);
    Json terms = Json::array();
    for (std::size_t g = 0; g < G.order(); ++g) {
      KappaValue v = kappa.at(static_cast<int>(g), i, j);
      if (!v.is_zero()) terms.push_back(term_json(G, static_cast<int>(g), v.constant, v.linear));
    }
    if (terms.empty()) continue;
    Json entry;
    entry["pair"] = {i, j};
    entry["terms"] = std::move(terms);
    out.push_back(std::move(entry));
  }
  return out;
}

Json serialize_spec(const ProblemSpec& spec) {
  Header h{spec.name, spec.cyclotomic_order, spec.dimension, spec.basis_names, spec.generator_names, spec.generators,
           spec.group};
  Json out = header_json(h);
  out["kappa"] = serialize_kappa(*spec.kappa, spec.basis_names);
  return out;
}

Json normalize_spec(const Json& doc, const SpecOptions& options) {
  Header h = read_header(doc, options);
  TermMap terms = read_terms(doc, h);
  Json out = header_json(h);
  Json kappa = Json::array();
  std::pair<std::size_t, std::size_t> current{h.n, h.n};
  for (const auto& [key, value] : terms) {
    if (value.first.is_zero() && is_zero(value.second)) continue;
    if (key.first != current) {
      current = key.first;
      Json entry;
      entry["pair"] = {key.first.first, key.first.second};
      entry["terms"] = Json::array();
      kappa.push_back(std::move(entry));
    }
    kappa.back()["terms"].push_back(term_json(*h.group, key.second, value.first, value.second));
  }
  out["kappa"] = std::move(kappa);
  return out;
}

}  // namespace orbifold::cli
