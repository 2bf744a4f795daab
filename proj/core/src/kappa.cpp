#include "orbifold/kappa.hpp"

#include <stdexcept>

namespace orbifold {

namespace {

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

// The three cyclic rotations of (a, b, c), as (sigma1, sigma2, sigma3).
std::array<std::array<std::size_t, 3>, 3> rotations(std::size_t a, std::size_t b, std::size_t c) {
  return {{{a, b, c}, {b, c, a}, {c, a, b}}};
}

}  // namespace

KappaParameter::KappaParameter(GroupPtr group) : group_(std::move(group)) {
  const std::size_t n = group_->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_list_.emplace_back(i, j);
  pairs_ = pair_list_.size();
  values_.assign(group_->order() * pairs_, KappaValue{Scalar(), Vector(n)});
}

std::size_t KappaParameter::pair_index(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= j || j >= n) throw std::out_of_range("pair index needs i < j < n");
  // Pairs (0,1), (0,2), ..., (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

KappaValue KappaParameter::at(int g, std::size_t i, std::size_t j) const {
  if (i == j) return KappaValue{Scalar(), Vector(dim())};
  if (i < j) return slot(g, pair_index(i, j));
  const KappaValue& v = slot(g, pair_index(j, i));
  return KappaValue{-v.constant, Scalar(-1) * v.linear};
}

void KappaParameter::set(int g, std::size_t i, std::size_t j, const Scalar& constant, const Vector& linear) {
  if (i == j) throw std::invalid_argument("kappa is alternating; pair must have distinct indices");
  if (linear.size() != dim()) throw std::invalid_argument("kappa linear value has wrong length");
  if (i < j) {
    slot(g, pair_index(i, j)) = KappaValue{constant, linear};
  } else {
    slot(g, pair_index(j, i)) = KappaValue{-constant, Scalar(-1) * linear};
  }
}

void KappaParameter::add(int g, std::size_t i, std::size_t j, const Scalar& constant, const Vector& linear) {
  KappaValue cur = at(g, i, j);
  set(g, i, j, cur.constant + constant, cur.linear + linear);
}

void KappaParameter::set_constant(int g, std::size_t i, std::size_t j, const Scalar& c) {
  set(g, i, j, c, at(g, i, j).linear);
}

void KappaParameter::set_linear(int g, std::size_t i, std::size_t j, const Vector& v) {
  set(g, i, j, at(g, i, j).constant, v);
}

Scalar KappaParameter::constant(int g, const Vector& v, const Vector& w) const {
  Scalar out;
  for (std::size_t p = 0; p < pairs_; ++p) {
    const KappaValue& kv = slot(g, p);
    if (kv.constant.is_zero()) continue;
    auto [i, j] = pair_list_[p];
    Scalar c = v[i] * w[j] - v[j] * w[i];
    if (!c.is_zero()) out += c * kv.constant;
  }
  return out;
}

Vector KappaParameter::linear(int g, const Vector& v, const Vector& w) const {
  Vector out(dim());
  for (std::size_t p = 0; p < pairs_; ++p) {
    const KappaValue& kv = slot(g, p);
    if (orbifold::is_zero(kv.linear)) continue;
    auto [i, j] = pair_list_[p];
    Scalar c = v[i] * w[j] - v[j] * w[i];
    if (!c.is_zero()) out = out + c * kv.linear;
  }
  return out;
}

bool KappaParameter::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool KappaParameter::linear_zero(int g) const {
  for (std::size_t p = 0; p < pairs_; ++p)
    if (!orbifold::is_zero(slot(g, p).linear)) return false;
  return true;
}

bool KappaParameter::constant_zero(int g) const {
  for (std::size_t p = 0; p < pairs_; ++p)
    if (!slot(g, p).constant.is_zero()) return false;
  return true;
}

bool KappaParameter::linear_zero() const {
  for (std::size_t g = 0; g < group_->order(); ++g)
    if (!linear_zero(static_cast<int>(g))) return false;
  return true;
}

bool KappaParameter::constant_zero() const {
  for (std::size_t g = 0; g < group_->order(); ++g)
    if (!constant_zero(static_cast<int>(g))) return false;
  return true;
}

std::vector<int> KappaParameter::support() const {
  std::vector<int> out;
  for (std::size_t g = 0; g < group_->order(); ++g)
    if (!linear_zero(static_cast<int>(g)) || !constant_zero(static_cast<int>(g))) out.push_back(static_cast<int>(g));
  return out;
}

std::vector<int> KappaParameter::linear_support() const {
  std::vector<int> out;
  for (std::size_t g = 0; g < group_->order(); ++g)
    if (!linear_zero(static_cast<int>(g))) out.push_back(static_cast<int>(g));
  return out;
}

KappaParameter KappaParameter::linear_part() const {
  KappaParameter k = *this;
  for (auto& v : k.values_) v.constant = Scalar();
  return k;
}

KappaParameter KappaParameter::constant_part() const {
  KappaParameter k = *this;
  for (auto& v : k.values_) v.linear = Vector(dim());
  return k;
}

KappaParameter& KappaParameter::operator+=(const KappaParameter& rhs) {
  if (rhs.group_ != group_) throw std::invalid_argument("kappa parameters over different groups");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    values_[k].constant += rhs.values_[k].constant;
    values_[k].linear = values_[k].linear + rhs.values_[k].linear;
  }
  return *this;
}

KappaParameter& KappaParameter::operator-=(const KappaParameter& rhs) {
  KappaParameter neg = rhs;
  neg *= Scalar(-1);
  return *this += neg;
}

KappaParameter& KappaParameter::operator*=(const Scalar& s) {
  for (auto& v : values_) {
    v.constant *= s;
    v.linear = s * v.linear;
  }
  return *this;
}

std::string condition_label(Condition c) {
  switch (c) {
    case Condition::Invariance: return "(i)";
    case Condition::Linear: return "(ii)";
    case Condition::Mixed: return "(iii)";
    case Condition::Constant: return "(iv)";
  }
  return "?";
}

std::vector<Witness> condition_residues(const KappaParameter& kappa, Condition cond) {
  const Group& G = kappa.group();
  const std::size_t n = G.dim();
  const int order = static_cast<int>(G.order());
  std::vector<Witness> out;

  if (cond == Condition::Invariance) {
    for (int g = 0; g < order; ++g) {
      for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
        auto [i, j] = kappa.pair_at(p);
        KappaValue base = kappa.at(g, i, j);
        for (int h = 1; h < order; ++h) {
          int c = G.conjugate_by(h, g);
          Vector hi = G.matrix(h).column(i), hj = G.matrix(h).column(j);
          Scalar dc = kappa.constant(c, hi, hj) - base.constant;
          Vector dl = kappa.linear(c, hi, hj) - G.act(h, base.linear);
          Polynomial r = Polynomial::constant(n, dc) + Polynomial::linear(dl);
          out.push_back(Witness{cond, g, h, {i, j}, std::move(r)});
        }
      }
    }
    return out;
  }

  std::vector<bool> lin_zero(order);
  for (int g = 0; g < order; ++g) lin_zero[g] = kappa.linear_zero(g);

  for (int g = 0; g < order; ++g) {
    const Matrix& mg = G.matrix(g);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          Polynomial r(n);
          for (const auto& s : rotations(a, b, c)) {
            Vector e1 = basis_vector(n, s[0]);
            Vector e2 = basis_vector(n, s[1]);
            Vector e3 = basis_vector(n, s[2]);
            switch (cond) {
              case Condition::Linear: {
                if (lin_zero[g]) break;
                Polynomial k = Polynomial::linear(kappa.linear(g, e2, e3));
                r += k * Polynomial::linear(e1 - mg.column(s[0]));
                break;
              }
              case Condition::Mixed:
              case Condition::Constant: {
                for (int h = 0; h < order; ++h) {
                  int gh = G.multiply(g, G.inverse(h));
                  if (lin_zero[h]) continue;
                  if (cond == Condition::Mixed && lin_zero[gh]) continue;
                  Vector inner = kappa.linear(h, e2, e3);
                  if (is_zero(inner)) continue;
                  Vector outer = e1 + G.matrix(h).column(s[0]);
                  if (cond == Condition::Mixed) {
                    r += Polynomial::linear(kappa.linear(gh, outer, inner));
                  } else {
                    r += Polynomial::constant(n, kappa.constant(gh, outer, inner));
                  }
                }
                if (cond == Condition::Mixed) {
                  Scalar kc = kappa.constant(g, e2, e3);
                  if (!kc.is_zero()) r -= Polynomial::linear(Scalar(2) * kc * (mg.column(s[0]) - e1));
                }
                break;
              }
              case Condition::Invariance:
                break;
            }
          }
          out.push_back(Witness{cond, g, std::nullopt, {a, b, c}, std::move(r)});
        }
  }
  return out;
}

bool ConditionReport::passed() const {
  for (const auto& c : conditions)
    if (!c.passed) return false;
  return true;
}

const Witness* ConditionReport::first_witness() const {
  for (const auto& c : conditions)
    if (!c.failures.empty()) return &c.failures.front();
  return nullptr;
}

ConditionReport check_conditions(const KappaParameter& kappa) {
  ConditionReport report;
  for (int c = 0; c < 4; ++c) {
    for (auto& w : condition_residues(kappa, static_cast<Condition>(c)))
      if (!w.residue.is_zero()) report.conditions[c].failures.push_back(std::move(w));
    report.conditions[c].passed = report.conditions[c].failures.empty();
  }
  return report;
}

LieOrbifoldReport check_lie_orbifold(const KappaParameter& kappa) {
  const Group& G = kappa.group();
  const std::size_t n = G.dim();
  const int order = static_cast<int>(G.order());
  for (int g = 1; g < order; ++g)
    if (!kappa.linear_zero(g))
      throw std::invalid_argument("linear part is supported off the identity (at " + G.word(g) + ")");

  LieOrbifoldReport rep;
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  auto bracket = [&](const Vector& v, const Vector& w) { return kappa.linear(0, v, w); };
  auto fail = [&rep](bool& flag, std::string msg) {
    if (flag) rep.failures.push_back(std::move(msg));
    flag = false;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac = bracket(e(i), bracket(e(j), e(k))) + bracket(e(j), bracket(e(k), e(i))) +
                     bracket(e(k), bracket(e(i), e(j)));
        if (!is_zero(jac)) fail(rep.bracket_jacobi, "Jacobi identity fails on basis triple");
      }

  for (int h = 1; h < order; ++h)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vector lhs = bracket(G.act(h, e(i)), G.act(h, e(j)));
        if (lhs != G.act(h, bracket(e(i), e(j))))
          fail(rep.bracket_invariant, "bracket is not invariant under " + G.word(h));
      }

  for (int g = 0; g < order; ++g) {
    const Matrix& mg = G.matrix(g);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          Vector hecke(n);
          Scalar compat;
          for (const auto& s : rotations(a, b, c)) {
            hecke = hecke + kappa.constant(g, e(s[1]), e(s[2])) * (e(s[0]) - mg.column(s[0]));
            compat += kappa.constant(g, e(s[2]), bracket(e(s[0]), e(s[1])));
          }
          if (!is_zero(hecke)) fail(rep.hecke_jacobi, "Drinfeld Hecke Jacobi condition fails at " + G.word(g));
          if (!compat.is_zero()) fail(rep.compatibility, "a_" + G.word(g) + " is not compatible with the bracket");
        }

    for (int h = 1; h < order; ++h) {
      int c = G.conjugate_by(G.inverse(h), g);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (kappa.constant(c, e(i), e(j)) != kappa.constant(g, G.act(h, e(i)), G.act(h, e(j))))
            fail(rep.conjugation, "a_g is not conjugation equivariant at " + G.word(g));
    }

    if (g != 0 && !kappa.constant_zero(g)) {
      Matrix form(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form(i, j) = kappa.at(g, i, j).constant;
      if (nullspace(form) != G.fixed_space(g) || G.codim(g) != 2)
        fail(rep.kernel, "ker a_" + G.word(g) + " differs from the fixed space or codim is not 2");
    }
  }
  return rep;
}

GaugeMap::GaugeMap(GroupPtr group) : group_(std::move(group)) {
  values_.assign(group_->dim() * group_->order(), Scalar());
}

Vector GaugeMap::apply(const Vector& v) const {
  const std::size_t m = group_->order();
  Vector out(m);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t g = 0; g < m; ++g)
      if (!values_[i * m + g].is_zero()) out[g] += v[i] * values_[i * m + g];
  }
  return out;
}

bool GaugeMap::is_invariant() const {
  const Group& G = *group_;
  const std::size_t n = G.dim(), m = G.order();
  for (std::size_t h = 1; h < m; ++h)
    for (std::size_t i = 0; i < n; ++i) {
      Vector lhs = apply(G.matrix(static_cast<int>(h)).column(i));
      Vector rhs(m);
      for (std::size_t g = 0; g < m; ++g)
        rhs[G.conjugate_by(static_cast<int>(h), static_cast<int>(g))] += (*this)(i, static_cast<int>(g));
      if (lhs != rhs) return false;
    }
  return true;
}

GaugeMap GaugeMap::averaged() const {
  const Group& G = *group_;
  const std::size_t n = G.dim(), m = G.order();
  GaugeMap out(group_);
  Scalar w(Rational(1, static_cast<long>(m)));
  for (std::size_t h = 0; h < m; ++h) {
    int hi = G.inverse(static_cast<int>(h));
    for (std::size_t i = 0; i < n; ++i) {
      Vector img = apply(G.matrix(static_cast<int>(h)).column(i));
      for (std::size_t g = 0; g < m; ++g)
        if (!img[g].is_zero()) out(i, G.conjugate_by(hi, static_cast<int>(g))) += w * img[g];
    }
  }
  return out;
}

KappaParameter apply_gauge(const KappaParameter& kappa, const GaugeMap& rho) {
  if (!rho.is_invariant()) throw std::invalid_argument("gauge map is not G-invariant");
  const Group& G = kappa.group();
  const std::size_t n = G.dim();
  const int m = static_cast<int>(G.order());
  KappaParameter out = kappa;

  // Linear part: add d*rho.
  for (int g = 0; g < m; ++g)
    for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
      auto [i, j] = kappa.pair_at(p);
      Vector ei = basis_vector(n, i), ej = basis_vector(n, j);
      Vector d = rho(j, g) * (ei - G.act(g, ei)) - rho(i, g) * (ej - G.act(g, ej));
      out.add(g, i, j, Scalar(), d);
    }

  // Constant part: subtract rho o kappa~^L, add rho (x) rho.
  KappaParameter lin = out;
  for (int g = 0; g < m; ++g)
    for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
      auto [i, j] = kappa.pair_at(p);
      Vector img = rho.apply(lin.at(g, i, j).linear);
      for (int k = 0; k < m; ++k)
        if (!img[k].is_zero()) out.add(G.multiply(k, g), i, j, -img[k], Vector(n));
    }
  for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
    auto [i, j] = kappa.pair_at(p);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        Scalar c = rho(i, a) * rho(j, b) - rho(j, a) * rho(i, b);
        if (!c.is_zero()) out.add(G.multiply(a, b), i, j, c, Vector(n));
      }
  }
  return out;
}

}  // namespace orbifold
