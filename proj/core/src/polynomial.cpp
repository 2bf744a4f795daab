#include "orbifold/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbifold {

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_vars(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("polynomials over different variable counts");
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::linear(const Vector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Scalar& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

bool Polynomial::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

Polynomial Polynomial::part(int d) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) == d) p.terms_.emplace(e, c);
  return p;
}

Vector Polynomial::linear_part() const {
  Vector v(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    Exponents e(nvars_, 0);
    e[i] = 1;
    v[i] = coefficient(e);
  }
  return v;
}

Scalar Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = e.size();
  check_vars(e.size(), nvars_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(std::max(a.nvars_, b.nvars_));
  check_vars(a.nvars_, b.nvars_);
  Polynomial p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::substitute(const Matrix& m) const {
  const std::size_t n = nvars_;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(linear(m.column(i)));
  Polynomial out(n);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Scalar>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto a, auto b) { return monomial_before(a->first, b->first); });
  std::string out;
  for (auto t : order) {
    const Scalar& c = t->second;
    bool unit_monomial = total(t->first) == 0;
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.to_rational();
      negative = r < 0;
      if (negative) r = -r;
      if (r != 1 || unit_monomial) coeff = r.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!unit_monomial) {
      if (!coeff.empty()) out += "*";
      out += monomial_string(t->first, names);
    }
  }
  return out;
}

Polynomial act(const Group& G, int g, const Polynomial& p) {
  if (g == Group::identity() || p.is_zero()) return p;
  return p.substitute(G.matrix(g));
}

std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  // Recursive fill in decreasing lex order.
  auto fill = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  fill(fill, 0, d);
  return out;
}

std::vector<Exponents> monomials_in_range(std::size_t n, int lo, int hi) {
  std::vector<Exponents> out;
  for (int d = lo; d <= hi; ++d) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool monomial_before(const Exponents& a, const Exponents& b) {
  int da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> default_basis_names(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> xyz = {"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

}  // namespace orbifold
