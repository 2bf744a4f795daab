#include "orbifold/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <regex>
#include <stdexcept>

#include "orbifold/expression.hpp"

namespace orbifold {

namespace {

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool all_zero(const std::vector<Rational>& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  // x^n - 1 divided by Phi_d for each proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> den = cyclotomic_polynomial(d);
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
      long c = num[k + dd];  // den is monic
      quot[k] = c;
      for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

CyclotomicContext::CyclotomicContext(int order) : order_(order), degree_(totient(order)) {
  for (long c : cyclotomic_polynomial(order)) phi_.emplace_back(c);
  powers_.reserve(order);
  std::vector<Rational> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    powers_.push_back(cur);
    std::vector<Rational> shifted(degree_ + 1, 0);
    for (int i = 0; i < degree_; ++i) shifted[i + 1] = cur[i];
    cur = reduce(std::move(shifted));
  }
}

const CyclotomicContext& CyclotomicContext::get(int order) {
  if (order <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicContext>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(order);
  if (it == table.end()) {
    it = table.emplace(order, std::unique_ptr<CyclotomicContext>(new CyclotomicContext(order))).first;
  }
  return *it->second;
}

const std::vector<Rational>& CyclotomicContext::power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return powers_[r];
}

std::vector<Rational> CyclotomicContext::reduce(std::vector<Rational> poly) const {
  for (std::size_t m = poly.size(); m-- > static_cast<std::size_t>(degree_);) {
    if (poly[m] == 0) continue;
    Rational c = poly[m];
    std::size_t shift = m - degree_;
    for (int j = 0; j <= degree_; ++j) poly[shift + j] -= c * phi_[j];
  }
  poly.resize(degree_, 0);
  return poly;
}

int required_cyclotomic_order(std::string_view text) {
  static const std::regex root(R"(E\s*\(\s*(\d+)\s*\))");
  int order = 1;
  std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), root); it != std::sregex_iterator(); ++it) {
    int n = std::stoi((*it)[1].str());
    if (n > 0) order = std::lcm(order, n);
  }
  return order;
}

Scalar::Scalar() : Scalar(Rational(0)) {}

Scalar::Scalar(long value) : Scalar(Rational(value)) {}

Scalar::Scalar(const Rational& value) : ctx_(&CyclotomicContext::rationals()), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Scalar::Scalar(const CyclotomicContext& ctx, std::vector<Rational> coefficients) : ctx_(&ctx) {
  coeffs_ = ctx.reduce(std::move(coefficients));
  for (auto& c : coeffs_) c.canonicalize();
  if (ctx.degree() == 1 || all_zero(coeffs_, 1)) {
    ctx_ = &CyclotomicContext::rationals();
    coeffs_.resize(1);
  }
}

Scalar Scalar::root_of_unity(const CyclotomicContext& ctx, int n, long power) {
  if (n <= 0 || ctx.order() % n != 0) {
    throw std::domain_error("E(" + std::to_string(n) + ") is not in Q(E(" +
                            std::to_string(ctx.order()) + "))");
  }
  return Scalar(ctx, ctx.power(static_cast<long>(ctx.order() / n) * (power % n)));
}

bool Scalar::is_zero() const noexcept { return is_rational() && coeffs_[0] == 0; }
bool Scalar::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }
bool Scalar::is_rational() const noexcept { return coeffs_.size() == 1; }

Rational Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

const CyclotomicContext& Scalar::common_context(const Scalar& other) const {
  if (other.is_rational()) return *ctx_;
  if (is_rational() || ctx_ == other.ctx_) return *other.ctx_;
  throw std::domain_error("scalars from Q(E(" + std::to_string(ctx_->order()) + ")) and Q(E(" +
                          std::to_string(other.ctx_->order()) + ")) cannot be combined");
}

void Scalar::promote_to(const CyclotomicContext& ctx) {
  if (ctx_ == &ctx) return;
  coeffs_.resize(ctx.degree(), 0);
  ctx_ = &ctx;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const CyclotomicContext& ctx = common_context(rhs);
  std::vector<Rational> out = coeffs_;
  out.resize(ctx.degree(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return *this = Scalar(ctx, std::move(out));
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.is_rational()) {
    Rational r = rhs.coeffs_[0];
    if (r == 0) return *this = Scalar();
    for (auto& c : coeffs_) c *= r;
    return *this;
  }
  if (is_rational()) {
    Rational r = coeffs_[0];
    *this = rhs;
    return *this *= Scalar(r);
  }
  const CyclotomicContext& ctx = common_context(rhs);
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return *this = Scalar(ctx, std::move(prod));
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.ctx_ == rhs.ctx_ && lhs.coeffs_ == rhs.coeffs_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(Rational(1) / coeffs_[0]);
  // Solve (multiplication by this) x = 1 in the power basis.
  const int d = ctx_->degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> shifted(d + j, 0);
    for (int i = 0; i < d; ++i) shifted[i + j] = coeffs_[i];
    std::vector<Rational> col = ctx_->reduce(std::move(shifted));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (int k = c; k <= d; ++k) m[c][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = m[i][d];
  return Scalar(*ctx_, std::move(x));
}

Scalar Scalar::conjugate() const {
  if (is_rational()) return *this;
  const int n = ctx_->order();
  std::vector<Rational> out(ctx_->degree(), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& p = ctx_->power(n - static_cast<long>(k));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs_[k] * p[i];
  }
  return Scalar(*ctx_, std::move(out));
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  Scalar result(1);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  const std::string root = "E(" + std::to_string(ctx_->order()) + ")";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += root;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::size_t Scalar::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(ctx_->order());
  auto mix = [&h](const mpz_class& z) {
    std::size_t v = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    if (mpz_size(z.get_mpz_t()) > 0) v ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& c : coeffs_) {
    mix(c.get_num());
    mix(c.get_den());
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

struct ScalarSemantics {
  using Value = Scalar;
  const CyclotomicContext& ctx;

  Value integer(const mpz_class& z, std::size_t) { return Scalar(Rational(z)); }
  Value root_of_unity(int n, std::size_t at) {
    if (ctx.order() % n != 0) {
      throw ParseError(ParseError::Kind::RootOrder, at,
                       "E(" + std::to_string(n) + ") needs a cyclotomic order divisible by " +
                           std::to_string(n) + ", have " + std::to_string(ctx.order()));
    }
    return Scalar::root_of_unity(ctx, n);
  }
  Value identifier(std::string_view name, std::size_t at) {
    throw ParseError(ParseError::Kind::UnknownSymbol, at, "unknown symbol '" + std::string(name) + "'");
  }
  Value add(Value a, const Value& b) { return a += b; }
  Value subtract(Value a, const Value& b) { return a -= b; }
  Value negate(const Value& a) { return -a; }
  Value multiply(Value a, const Value& b, std::size_t) { return a *= b; }
  Value divide(Value a, const Value& b, std::size_t at) {
    if (b.is_zero()) throw ParseError(ParseError::Kind::DivisionByZero, at, "division by zero");
    return a /= b;
  }
  Value power(const Value& a, long e, std::size_t at) {
    if (e < 0 && a.is_zero()) throw ParseError(ParseError::Kind::DivisionByZero, at, "zero to a negative power");
    return a.pow(e);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const CyclotomicContext& ctx) {
  ScalarSemantics sem{ctx};
  return ExpressionParser<ScalarSemantics>(text, sem).parse();
}

}  // namespace orbifold
