#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbifold {

using Rational = mpq_class;

/// The field Q(zeta_N): rationals adjoined a primitive N-th root of unity.
///
/// Contexts are interned: `get(N)` always returns the same object for the same
/// N, so scalars may hold a plain pointer to their context. A context is
/// immutable once built.
class CyclotomicContext {
 public:
  static const CyclotomicContext& get(int order);
  static const CyclotomicContext& rationals() { return get(1); }

  CyclotomicContext(const CyclotomicContext&) = delete;
  CyclotomicContext& operator=(const CyclotomicContext&) = delete;

  int order() const noexcept { return order_; }
  /// Euler totient of the order; the length of every coefficient vector.
  int degree() const noexcept { return degree_; }

  /// Coefficients of the N-th cyclotomic polynomial, constant term first.
  const std::vector<Rational>& minimal_polynomial() const noexcept { return phi_; }

  /// zeta_N^k reduced modulo the minimal polynomial (k taken mod N).
  const std::vector<Rational>& power(long k) const;

  /// Reduces an arbitrary polynomial in zeta_N to a vector of length degree().
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

 private:
  explicit CyclotomicContext(int order);

  int order_;
  int degree_;
  std::vector<Rational> phi_;
  std::vector<std::vector<Rational>> powers_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int n);

/// Least common multiple of every n appearing as E(n) in `text` (1 if none).
int required_cyclotomic_order(std::string_view text);

/// An exact element of a cyclotomic field.
///
/// Elements whose context has degree 1 (N = 1 or 2) are plain rationals and
/// mix freely with elements of any other context. Two elements of distinct
/// non-rational contexts cannot be combined.
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(const CyclotomicContext& ctx, std::vector<Rational> coefficients);

  /// E(n)^power, a power of a primitive n-th root of unity; n must divide N.
  static Scalar root_of_unity(const CyclotomicContext& ctx, int n, long power = 1);

  const CyclotomicContext& context() const noexcept { return *ctx_; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// The value as a rational; throws std::domain_error if irrational.
  Rational to_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  /// Image under zeta_N -> zeta_N^{N-1} (complex conjugation).
  Scalar conjugate() const;
  Scalar pow(long exponent) const;

  /// Canonical text: rational coefficients on ascending powers of E(N).
  std::string to_string() const;

  std::size_t hash() const noexcept;

 private:
  void promote_to(const CyclotomicContext& ctx);
  const CyclotomicContext& common_context(const Scalar& other) const;

  const CyclotomicContext* ctx_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the scalar grammar (integers, fractions, E(n), + - * / ^, parens).
/// Throws ParseError.
Scalar parse_scalar(std::string_view text, const CyclotomicContext& ctx);

}  // namespace orbifold

template <>
struct std::hash<orbifold::Scalar> {
  std::size_t operator()(const orbifold::Scalar& s) const noexcept { return s.hash(); }
};
