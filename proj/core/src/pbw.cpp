#include "orbifold/pbw.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace orbifold {

Scalar TPolynomial::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Scalar() : it->second;
}

void TPolynomial::add(int power, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& rhs) {
  for (const auto& [p, c] : rhs.terms_) add(p, c);
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& rhs) {
  for (const auto& [p, c] : rhs.terms_) add(p, -c);
  return *this;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add(pa + pb, ca * cb);
  return out;
}

TPolynomial TPolynomial::operator-() const {
  TPolynomial out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

PbwElement PbwElement::monomial(const Exponents& e, int g, const TPolynomial& c) {
  PbwElement out(e.size());
  out.add(e, g, c);
  return out;
}

void PbwElement::add(const Exponents& e, int g, const TPolynomial& c) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = e.size();
  if (e.size() != nvars_) throw std::invalid_argument("PBW term has the wrong number of exponents");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{e, g}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PbwElement PbwElement::t_coefficient(int i) const {
  PbwElement out(nvars_);
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, c.coefficient(i));
  return out;
}

PbwElement PbwElement::collapse_t() const {
  PbwElement out(nvars_);
  for (const auto& [k, c] : terms_)
    for (const auto& [p, s] : c.terms()) out.add(k.first, k.second, s);
  return out;
}

int PbwElement::max_t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) d = std::max(d, c.terms().rbegin()->first);
  return d;
}

PbwElement& PbwElement::operator+=(const PbwElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, -c);
  return *this;
}

PbwElement operator*(const Scalar& s, PbwElement a) {
  if (s.is_zero()) return PbwElement(a.nvars_);
  PbwElement out(a.nvars_);
  for (const auto& [k, c] : a.terms_) out.add(k.first, k.second, c * TPolynomial(s));
  return out;
}

std::string PbwElement::to_string(const Group& group, const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  struct Item {
    const Exponents* e;
    int g;
    int t;
    Scalar c;
  };
  std::vector<Item> items;
  for (const auto& [k, c] : terms_)
    for (const auto& [p, s] : c.terms()) items.push_back({&k.first, k.second, p, s});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (*a.e != *b.e) return monomial_before(*a.e, *b.e);
    return std::tie(a.g, a.t) < std::tie(b.g, b.t);
  });

  std::string out;
  for (const auto& it : items) {
    std::vector<std::string> factors;
    if (std::any_of(it.e->begin(), it.e->end(), [](int x) { return x != 0; }))
      factors.push_back(monomial_string(*it.e, names));
    if (it.g != Group::identity()) factors.push_back(group.word(it.g));
    if (it.t == 1) factors.push_back("t");
    if (it.t > 1) factors.push_back("t^" + std::to_string(it.t));

    bool negative = false;
    std::string coeff;
    if (it.c.is_rational()) {
      Rational r = it.c.to_rational();
      negative = r < 0;
      if (negative) r = -r;
      if (r != 1 || factors.empty()) coeff = r.get_str();
    } else {
      coeff = "(" + it.c.to_string() + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body = coeff;
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    out += body;
  }
  return out;
}

}  // namespace orbifold
