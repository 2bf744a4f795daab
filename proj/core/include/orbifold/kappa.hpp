#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbifold/group.hpp"
#include "orbifold/polynomial.hpp"

namespace orbifold {

/// kappa_g(v_i, v_j) for one group element: a constant plus a vector in V.
struct KappaValue {
  Scalar constant;
  Vector linear;

  bool is_zero() const { return constant.is_zero() && orbifold::is_zero(linear); }
  friend bool operator==(const KappaValue&, const KappaValue&) = default;
};

/// The parameter kappa : V ^ V -> (k + V) (x) kG, stored on basis pairs i < j
/// and extended alternatingly and bilinearly.
class KappaParameter {
 public:
  explicit KappaParameter(GroupPtr group);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t dim() const noexcept { return group_->dim(); }
  std::size_t pair_count() const noexcept { return pairs_; }
  /// Position of the pair (i, j), i < j, in the lexicographic pair order.
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> pair_at(std::size_t p) const { return pair_list_[p]; }

  /// Value on (v_i, v_j); alternating in the indices.
  KappaValue at(int g, std::size_t i, std::size_t j) const;
  void set(int g, std::size_t i, std::size_t j, const Scalar& constant, const Vector& linear);
  void add(int g, std::size_t i, std::size_t j, const Scalar& constant, const Vector& linear);
  void set_constant(int g, std::size_t i, std::size_t j, const Scalar& c);
  void set_linear(int g, std::size_t i, std::size_t j, const Vector& v);

  /// kappa^C_g(v, w) and kappa^L_g(v, w) for arbitrary vectors.
  Scalar constant(int g, const Vector& v, const Vector& w) const;
  Vector linear(int g, const Vector& v, const Vector& w) const;

  bool is_zero() const;
  bool linear_zero(int g) const;
  bool constant_zero(int g) const;
  bool linear_zero() const;
  bool constant_zero() const;
  /// Elements g with kappa_g != 0.
  std::vector<int> support() const;
  std::vector<int> linear_support() const;

  KappaParameter linear_part() const;
  KappaParameter constant_part() const;

  KappaParameter& operator+=(const KappaParameter& rhs);
  KappaParameter& operator-=(const KappaParameter& rhs);
  KappaParameter& operator*=(const Scalar& s);
  friend KappaParameter operator+(KappaParameter a, const KappaParameter& b) { return a += b; }
  friend KappaParameter operator-(KappaParameter a, const KappaParameter& b) { return a -= b; }
  friend KappaParameter operator*(const Scalar& s, KappaParameter a) { return a *= s; }
  friend bool operator==(const KappaParameter& a, const KappaParameter& b) { return a.values_ == b.values_; }

 private:
  KappaValue& slot(int g, std::size_t p) { return values_[g * pairs_ + p]; }
  const KappaValue& slot(int g, std::size_t p) const { return values_[g * pairs_ + p]; }

  GroupPtr group_;
  std::size_t pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> pair_list_;
  std::vector<KappaValue> values_;  // dense, g-major
};

enum class Condition { Invariance = 0, Linear = 1, Mixed = 2, Constant = 3 };

/// "(i)", "(ii)", "(iii)", "(iv)"
std::string condition_label(Condition c);

/// One evaluation slot of a condition. For Invariance `h` is the conjugating
/// element and `indices` the pair; otherwise `indices` is the triple. The
/// residue lives in S: degree <= 1 for (i), 2 for (ii), 1 for (iii), 0 for (iv).
struct Witness {
  Condition condition;
  int g = 0;
  std::optional<int> h;
  std::vector<std::size_t> indices;
  Polynomial residue;
};

/// Every slot of the condition, zero residues included, in the order
/// (g, pair or triple, h). The residue is affine in kappa, which the solver
/// relies on.
std::vector<Witness> condition_residues(const KappaParameter& kappa, Condition c);

struct ConditionResult {
  bool passed = true;
  std::vector<Witness> failures;
};

struct ConditionReport {
  std::array<ConditionResult, 4> conditions;

  const ConditionResult& operator[](Condition c) const { return conditions[static_cast<int>(c)]; }
  bool passed() const;
  /// The first failure of the lowest-numbered failing condition.
  const Witness* first_witness() const;
};

ConditionReport check_conditions(const KappaParameter& kappa);

struct LieOrbifoldReport {
  bool bracket_jacobi = true;      // kappa^L_1 satisfies the Jacobi identity
  bool bracket_invariant = true;   // G acts by Lie algebra automorphisms
  bool hecke_jacobi = true;        // the a_g define a Drinfeld Hecke algebra
  bool conjugation = true;         // a_{h^-1 g h}(v, w) = a_g(^h v, ^h w)
  bool kernel = true;              // a_g = 0 or ker a_g = V^g of codim 2
  bool compatibility = true;       // a_g(v3, [v1, v2]) + cyclic = 0
  std::vector<std::string> failures;

  bool passed() const {
    return bracket_jacobi && bracket_invariant && hecke_jacobi && conjugation && kernel && compatibility;
  }
};

/// Throws std::invalid_argument if kappa^L is supported off the identity.
LieOrbifoldReport check_lie_orbifold(const KappaParameter& kappa);

/// rho : V -> kG; entry (i, g) is the coefficient of g in rho(v_i).
class GaugeMap {
 public:
  explicit GaugeMap(GroupPtr group);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  Scalar& operator()(std::size_t i, int g) { return values_[i * group_->order() + g]; }
  const Scalar& operator()(std::size_t i, int g) const { return values_[i * group_->order() + g]; }
  /// Coefficients of rho(v) over the group elements.
  Vector apply(const Vector& v) const;

  /// rho(^h v) = h rho(v) h^{-1} for all h.
  bool is_invariant() const;
  /// (1/|G|) sum_h h^{-1} rho(^h v) h, the projection onto invariant maps.
  GaugeMap averaged() const;

 private:
  GroupPtr group_;
  std::vector<Scalar> values_;
};

/// kappa~ with kappa~^L = kappa^L + d*rho and
/// kappa~^C = kappa^C - rho o kappa~^L + rho (x) rho.
/// Throws std::invalid_argument if rho is not G-invariant.
KappaParameter apply_gauge(const KappaParameter& kappa, const GaugeMap& rho);

}  // namespace orbifold
