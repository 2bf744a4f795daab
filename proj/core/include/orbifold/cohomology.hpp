#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "orbifold/kappa.hpp"
#include "orbifold/polynomial.hpp"

namespace orbifold {

using IndexSet = std::vector<std::size_t>;

/// A cochain in C^p = sum_g S g (x) Lambda^p V*, stored on increasing index
/// sets J (the value on v_{j_1} ^ ... ^ v_{j_p}). Values have polynomial
/// degree at most `poly_bound`.
class Cochain {
 public:
  using Key = std::pair<int, IndexSet>;

  Cochain(GroupPtr group, std::size_t p, int poly_bound);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t degree() const noexcept { return p_; }
  int poly_bound() const noexcept { return q_; }
  std::size_t dim() const noexcept { return group_->dim(); }
  const std::map<Key, Polynomial>& entries() const noexcept { return entries_; }

  /// Value on v_{indices[0]} ^ ...; any order, sign applied, 0 on repeats.
  Polynomial value(int g, const IndexSet& indices) const;
  /// Value on u_1 ^ ... ^ u_p for arbitrary vectors.
  Polynomial evaluate(int g, const std::vector<Vector>& vectors) const;
  void set(int g, const IndexSet& indices, const Polynomial& value);
  void add(int g, const IndexSet& indices, const Polynomial& value);

  bool is_zero() const noexcept { return entries_.empty(); }
  std::vector<int> support() const;
  /// Largest polynomial degree present; -1 if zero.
  int max_poly_degree() const;
  /// Part of polynomial degree exactly d.
  Cochain part(int d) const;

  Cochain& operator+=(const Cochain& rhs);
  Cochain& operator-=(const Cochain& rhs);
  Cochain& operator*=(const Scalar& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }

 private:
  GroupPtr group_;
  std::size_t p_;
  int q_;
  std::map<Key, Polynomial> entries_;
};

/// d*: (d*a)_g(v_{j_1} ^ ... ^ v_{j_{p+1}}) =
///   sum_i (-1)^{i+1} a_g(... v_{j_i} omitted ...) (v_{j_i} - ^g v_{j_i}).
Cochain differential(const Cochain& alpha);

/// The cochain bracket on 2-cochains of polynomial degree <= 1; symmetric,
/// bilinear, zero on two constant cochains. Throws std::invalid_argument
/// for other inputs.
Cochain bracket(const Cochain& alpha, const Cochain& beta);

bool is_cocycle(const Cochain& alpha);

/// Finds rho of degree p-1 and polynomial degree <= q-1 with d*rho = gamma.
std::optional<Cochain> is_coboundary(const Cochain& gamma);

/// (h.a)_{hgh^-1}(v_J) = ^h(a_g(^{h^-1} v_J)).
Cochain act(int h, const Cochain& alpha);
/// (1/|G|) sum_h h.a
Cochain average(const Cochain& alpha);
bool is_invariant(const Cochain& alpha);

/// Coordinates for the cochains of degree p supported on `elements` whose
/// values have polynomial degree in [lo, hi].
class CochainSpace {
 public:
  CochainSpace(GroupPtr group, std::size_t p, int lo, int hi, std::vector<int> elements = {});

  std::size_t size() const noexcept { return coords_.size(); }
  /// Throws std::invalid_argument if alpha has terms outside the space.
  Vector coordinates(const Cochain& alpha) const;
  Cochain element(const Vector& x) const;
  Cochain basis(std::size_t k) const;

 private:
  struct Coord {
    int g;
    IndexSet set;
    Exponents mono;
  };
  GroupPtr group_;
  std::size_t p_;
  int hi_;
  std::vector<Coord> coords_;
  std::map<std::tuple<int, IndexSet, Exponents>, std::size_t> index_;
};

/// Bases of H^p_g = S(V^g) g (x) Lambda^{p-c}(V^g)* (x) Lambda^c((V^g)^perp)*
/// with c = codim V^g, truncated at polynomial degree <= q (or == q when
/// homogeneous), and the G-invariant subspace of their sum.
struct RepresentativeSpace {
  std::size_t p = 0;
  int q = 0;
  bool homogeneous = false;
  std::vector<std::vector<Cochain>> per_element;  // indexed by group element
  std::vector<Cochain> invariant_basis;
  std::vector<std::size_t> class_dimensions;     // invariant dimension per conjugacy class
  std::size_t total_dimension() const;
  std::size_t invariant_dimension() const noexcept { return invariant_basis.size(); }
  /// Membership of a cochain in the span of invariant_basis.
  bool contains_invariant(const Cochain& alpha) const;
  /// Membership in the span of per_element (not necessarily invariant).
  bool contains(const Cochain& alpha) const;

  std::shared_ptr<const CochainSpace> space;
  Subspace span;
  Subspace invariant_span;
};

RepresentativeSpace representative_space(const GroupPtr& group, std::size_t p, int q, bool homogeneous = false);

Cochain linear_cochain(const KappaParameter& kappa);
Cochain constant_cochain(const KappaParameter& kappa);
/// kappa with kappa^L from `linear` (degree 1 part) and kappa^C from `constant`.
KappaParameter kappa_from_cochains(const Cochain& linear, const Cochain& constant);
/// rho viewed as a constant 1-cochain.
Cochain gauge_cochain(const GaugeMap& rho);

}  // namespace orbifold
