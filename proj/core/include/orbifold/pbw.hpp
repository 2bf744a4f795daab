#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/group.hpp"
#include "orbifold/polynomial.hpp"

namespace orbifold {

/// Polynomial in the formal central variable t: exponent -> coefficient.
class TPolynomial {
 public:
  TPolynomial() = default;
  TPolynomial(const Scalar& c, int power = 0) { add(power, c); }  // NOLINT

  const std::map<int, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(int power) const;
  void add(int power, const Scalar& c);

  TPolynomial& operator+=(const TPolynomial& rhs);
  TPolynomial& operator-=(const TPolynomial& rhs);
  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
  TPolynomial operator-() const;
  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

 private:
  std::map<int, Scalar> terms_;
};

/// Element of S#G (or of H_kappa written in the PBW basis): a combination of
/// v_1^{m_1} ... v_n^{m_n} g with coefficients in k[t].
class PbwElement {
 public:
  using Key = std::pair<Exponents, int>;

  PbwElement() = default;
  explicit PbwElement(std::size_t nvars) : nvars_(nvars) {}

  static PbwElement monomial(const Exponents& e, int g, const TPolynomial& c = Scalar(1));

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Key, TPolynomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Exponents& e, int g, const TPolynomial& c);

  /// Coefficient of t^i, as an element with t-free coefficients.
  PbwElement t_coefficient(int i) const;
  /// Substitutes t = 1.
  PbwElement collapse_t() const;
  int max_t_degree() const;

  PbwElement& operator+=(const PbwElement& rhs);
  PbwElement& operator-=(const PbwElement& rhs);
  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(const Scalar& s, PbwElement a);
  friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }

  /// Terms by decreasing degree, decreasing exponents, increasing group
  /// index, increasing t power, e.g. "x*y - z*h" or "x*y - z*h*t".
  std::string to_string(const Group& group, const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Key, TPolynomial> terms_;
};

}  // namespace orbifold
