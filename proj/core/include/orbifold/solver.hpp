#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbifold/kappa.hpp"

namespace orbifold {

enum class ParameterKind { Linear, ConstantGivenLinear };

/// An affine space of parameters, particular + span(basis). For the linear
/// stage the particular solution is zero; for the constant stage it carries
/// the fixed linear part.
struct ParameterSpace {
  ParameterKind kind = ParameterKind::Linear;
  std::optional<KappaParameter> particular;  // nullopt: no solution at all
  std::vector<KappaParameter> basis;
  /// Linear stage only: whether each basis vector lies in the representative
  /// space H^2 (polynomial degree 1).
  std::vector<bool> in_representative_space;

  std::size_t dimension() const noexcept { return basis.size(); }
  bool empty() const noexcept { return !particular.has_value(); }
  /// particular + sum coeffs[k] basis[k]
  KappaParameter combination(const Vector& coeffs) const;
  /// For the linear stage tests kappa^L; for the constant stage tests that
  /// kappa^C is in the space (kappa^L is ignored).
  bool contains(const KappaParameter& kappa) const;
};

/// Linear parts satisfying conditions (i) and (ii). Unknowns are ordered by
/// (g, pair i < j, coordinate) and the basis is in reduced echelon form.
ParameterSpace solve_linear_part(const GroupPtr& group);

/// Constant parts satisfying (i), (iii) and (iv) for the linear part of
/// `kappa_linear` (its constant part is ignored). Throws
/// std::invalid_argument if that linear part fails (i) or (ii).
ParameterSpace solve_constant_part(const KappaParameter& kappa_linear);

}  // namespace orbifold
