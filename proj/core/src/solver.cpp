#include "orbifold/solver.hpp"

#include <map>
#include <stdexcept>

#include "orbifold/cohomology.hpp"

namespace orbifold {

namespace {

// Flattens the residues of several conditions into coordinate rows. Row
// identities (slot, monomial) are assigned on first sight so every column
// lands in the same coordinate system.
class ResidueRows {
 public:
  std::map<std::size_t, Scalar> flatten(const KappaParameter& kappa, const std::vector<Condition>& conds) {
    std::map<std::size_t, Scalar> out;
    std::size_t slot = 0;
    for (Condition c : conds)
      for (const auto& w : condition_residues(kappa, c)) {
        for (const auto& [mono, coeff] : w.residue.terms()) {
          auto [it, inserted] = rows_.emplace(std::make_pair(slot, mono), rows_.size());
          out[it->second] += coeff;
        }
        ++slot;
      }
    return out;
  }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::map<std::pair<std::size_t, Exponents>, std::size_t> rows_;
};

Matrix assemble(const std::vector<std::map<std::size_t, Scalar>>& columns, std::size_t rows) {
  Matrix a(rows, columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [r, v] : columns[k]) a(r, k) = v;
  return a;
}

Vector linear_unknowns(const KappaParameter& kappa) {
  Vector x;
  for (std::size_t g = 0; g < kappa.group().order(); ++g)
    for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
      auto [i, j] = kappa.pair_at(p);
      const Vector& v = kappa.at(static_cast<int>(g), i, j).linear;
      x.insert(x.end(), v.begin(), v.end());
    }
  return x;
}

Vector constant_unknowns(const KappaParameter& kappa) {
  Vector x;
  for (std::size_t g = 0; g < kappa.group().order(); ++g)
    for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
      auto [i, j] = kappa.pair_at(p);
      x.push_back(kappa.at(static_cast<int>(g), i, j).constant);
    }
  return x;
}

KappaParameter linear_from_unknowns(const GroupPtr& group, const Vector& x) {
  KappaParameter k(group);
  const std::size_t n = group->dim();
  std::size_t pos = 0;
  for (std::size_t g = 0; g < group->order(); ++g)
    for (std::size_t p = 0; p < k.pair_count(); ++p) {
      auto [i, j] = k.pair_at(p);
      k.set_linear(static_cast<int>(g), i, j, Vector(x.begin() + pos, x.begin() + pos + n));
      pos += n;
    }
  return k;
}

KappaParameter constant_from_unknowns(const GroupPtr& group, const Vector& x) {
  KappaParameter k(group);
  std::size_t pos = 0;
  for (std::size_t g = 0; g < group->order(); ++g)
    for (std::size_t p = 0; p < k.pair_count(); ++p) {
      auto [i, j] = k.pair_at(p);
      k.set_constant(static_cast<int>(g), i, j, x[pos++]);
    }
  return k;
}

}  // namespace

KappaParameter ParameterSpace::combination(const Vector& coeffs) const {
  if (!particular) throw std::logic_error("empty parameter space");
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count does not match dimension");
  KappaParameter k = *particular;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) k += coeffs[i] * basis[i];
  return k;
}

bool ParameterSpace::contains(const KappaParameter& kappa) const {
  if (!particular) return false;
  const bool linear = kind == ParameterKind::Linear;
  auto unknowns = linear ? linear_unknowns : constant_unknowns;
  Vector target = unknowns(kappa) - unknowns(*particular);
  std::vector<Vector> span;
  for (const auto& b : basis) span.push_back(unknowns(b));
  return Subspace::from_spanning(target.size(), span).contains(target);
}

ParameterSpace solve_linear_part(const GroupPtr& group) {
  KappaParameter zero(group);
  const std::size_t n = group->dim();
  const std::size_t unknowns = group->order() * zero.pair_count() * n;
  const std::vector<Condition> conds = {Condition::Invariance, Condition::Linear};

  ResidueRows rows;
  std::vector<std::map<std::size_t, Scalar>> columns;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Vector x(unknowns);
    x[u] = 1;
    columns.push_back(rows.flatten(linear_from_unknowns(group, x), conds));
  }
  Subspace sol = nullspace(assemble(columns, rows.size()));

  ParameterSpace space;
  space.kind = ParameterKind::Linear;
  space.particular = zero;
  RepresentativeSpace h2 = representative_space(group, 2, 1, true);
  for (const auto& v : sol.basis()) {
    space.basis.push_back(linear_from_unknowns(group, v));
    space.in_representative_space.push_back(h2.contains(linear_cochain(space.basis.back())));
  }
  return space;
}

ParameterSpace solve_constant_part(const KappaParameter& kappa_linear) {
  KappaParameter base = kappa_linear.linear_part();
  ConditionReport pre = check_conditions(base);
  if (!pre[Condition::Invariance].passed || !pre[Condition::Linear].passed)
    throw std::invalid_argument("linear part fails condition (i) or (ii)");

  const GroupPtr& group = base.group_ptr();
  const std::size_t unknowns = group->order() * base.pair_count();
  const std::vector<Condition> conds = {Condition::Invariance, Condition::Mixed, Condition::Constant};

  ResidueRows rows;
  std::map<std::size_t, Scalar> r0 = rows.flatten(base, conds);
  std::vector<std::map<std::size_t, Scalar>> columns;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Vector x(unknowns);
    x[u] = 1;
    auto col = rows.flatten(base + constant_from_unknowns(group, x), conds);
    for (const auto& [r, v] : r0) col[r] -= v;
    columns.push_back(std::move(col));
  }
  Matrix a = assemble(columns, rows.size());
  Vector rhs(rows.size());
  for (const auto& [r, v] : r0) rhs[r] = -v;

  ParameterSpace space;
  space.kind = ParameterKind::ConstantGivenLinear;
  auto sol = solve_affine(a, rhs);
  if (!sol) return space;
  space.particular = base + constant_from_unknowns(group, sol->particular);
  for (const auto& v : sol->homogeneous.basis()) space.basis.push_back(constant_from_unknowns(group, v));
  return space;
}

}  // namespace orbifold
