#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbifold/group.hpp"
#include "orbifold/scalar.hpp"

namespace orbifold {

using Exponents = std::vector<int>;

/// Element of S = S(V) = k[v_1, ..., v_n]. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  /// sum_i coeffs[i] v_i
  static Polynomial linear(const Vector& coeffs);
  static Polynomial monomial(const Exponents& e, const Scalar& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int d) const;
  Scalar coefficient(const Exponents& e) const;
  /// The homogeneous part of degree d.
  Polynomial part(int d) const;
  /// Coefficients of the degree-1 part.
  Vector linear_part() const;
  Scalar constant_term() const;

  void add_term(const Exponents& e, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Substitutes v_i -> sum_j m(j, i) v_j, i.e. applies the linear map with
  /// matrix m to every variable.
  Polynomial substitute(const Matrix& m) const;

  /// Terms in decreasing total degree, then decreasing exponent vector, e.g.
  /// "x^2*y - 3/2*z + 1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

/// ^g p
Polynomial act(const Group& G, int g, const Polynomial& p);

/// All exponent vectors of total degree exactly d in n variables, in
/// decreasing lexicographic order (x^2, x*y, x*z, y^2, ...).
std::vector<Exponents> monomials_of_degree(std::size_t n, int d);
/// Concatenation of monomials_of_degree for degrees lo..hi.
std::vector<Exponents> monomials_in_range(std::size_t n, int lo, int hi);

/// Ordering used for printing: higher degree first, then lex-larger first.
bool monomial_before(const Exponents& a, const Exponents& b);

/// "x^2*y", or "1" for the empty monomial.
std::string monomial_string(const Exponents& e, const std::vector<std::string>& names);

/// Default names: x, y, z for n <= 3, otherwise v1, ..., vn.
std::vector<std::string> default_basis_names(std::size_t n);

}  // namespace orbifold
