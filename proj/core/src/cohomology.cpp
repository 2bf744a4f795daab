#include "orbifold/cohomology.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace orbifold {

namespace {

std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexSet& s) {
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return 0;
  return sign;
}

Vector unit(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

// sum_h sum_sigma outer_{g h^-1}(inner_h(v_s1 ^ v_s2) ^ v_s3) with linear inner.
Cochain bracket_term(const Cochain& outer, const Cochain& inner) {
  const Group& G = outer.group();
  const std::size_t n = G.dim();
  Cochain out(outer.group_ptr(), 3, 1);
  if (outer.is_zero() || inner.is_zero()) return out;
  std::vector<int> outer_support = outer.support(), inner_support = inner.support();
  for (const auto& J : subsets(n, 3)) {
    const std::array<std::array<std::size_t, 3>, 3> rot = {
        {{J[0], J[1], J[2]}, {J[1], J[2], J[0]}, {J[2], J[0], J[1]}}};
    for (int h : inner_support) {
      std::array<Vector, 3> u;
      for (int s = 0; s < 3; ++s) u[s] = inner.value(h, {rot[s][0], rot[s][1]}).linear_part();
      for (int k : outer_support) {
        // k = g h^-1, so g = k h.
        int g = G.multiply(k, h);
        Polynomial acc(n);
        for (int s = 0; s < 3; ++s)
          if (!is_zero(u[s])) acc += outer.evaluate(k, {u[s], unit(n, rot[s][2])});
        out.add(g, J, acc);
      }
    }
  }
  return out;
}

}  // namespace

Cochain::Cochain(GroupPtr group, std::size_t p, int poly_bound)
    : group_(std::move(group)), p_(p), q_(poly_bound) {}

Polynomial Cochain::value(int g, const IndexSet& indices) const {
  IndexSet s = indices;
  int sign = sort_with_sign(s);
  if (sign == 0) return Polynomial(dim());
  auto it = entries_.find({g, s});
  if (it == entries_.end()) return Polynomial(dim());
  return sign > 0 ? it->second : -it->second;
}

Polynomial Cochain::evaluate(int g, const std::vector<Vector>& vectors) const {
  if (vectors.size() != p_) throw std::invalid_argument("cochain evaluated on the wrong number of vectors");
  Polynomial out(dim());
  for (auto it = entries_.lower_bound({g, {}}); it != entries_.end() && it->first.first == g; ++it) {
    const IndexSet& J = it->first.second;
    Matrix minor(p_, p_);
    for (std::size_t a = 0; a < p_; ++a)
      for (std::size_t b = 0; b < p_; ++b) minor(a, b) = vectors[a][J[b]];
    Scalar det = p_ == 0 ? Scalar(1) : determinant(minor);
    if (!det.is_zero()) out += det * it->second;
  }
  return out;
}

void Cochain::set(int g, const IndexSet& indices, const Polynomial& value) {
  IndexSet s = indices;
  int sign = sort_with_sign(s);
  if (s.size() != p_) throw std::invalid_argument("cochain index set has the wrong size");
  if (sign == 0) throw std::invalid_argument("cochain index set repeats an index");
  if (value.degree() > q_) throw std::invalid_argument("cochain value exceeds the polynomial degree bound");
  if (value.is_zero()) {
    entries_.erase({g, s});
  } else {
    entries_[{g, s}] = sign > 0 ? value : -value;
  }
}

void Cochain::add(int g, const IndexSet& indices, const Polynomial& value) {
  if (value.is_zero()) return;
  set(g, indices, this->value(g, indices) + value);
}

std::vector<int> Cochain::support() const {
  std::vector<int> out;
  for (const auto& [k, v] : entries_)
    if (out.empty() || out.back() != k.first) out.push_back(k.first);
  return out;
}

int Cochain::max_poly_degree() const {
  int d = -1;
  for (const auto& [k, v] : entries_) d = std::max(d, v.degree());
  return d;
}

Cochain Cochain::part(int d) const {
  Cochain out(group_, p_, q_);
  for (const auto& [k, v] : entries_) {
    Polynomial pd = v.part(d);
    if (!pd.is_zero()) out.entries_.emplace(k, std::move(pd));
  }
  return out;
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
  if (rhs.p_ != p_) throw std::invalid_argument("adding cochains of different degrees");
  q_ = std::max(q_, rhs.q_);
  for (const auto& [k, v] : rhs.entries_) add(k.first, k.second, v);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
  Cochain neg = rhs;
  neg *= Scalar(-1);
  return *this += neg;
}

Cochain& Cochain::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= s;
  return *this;
}

Cochain differential(const Cochain& alpha) {
  const Group& G = alpha.group();
  const std::size_t n = G.dim(), p = alpha.degree();
  Cochain out(alpha.group_ptr(), p + 1, alpha.poly_bound() + 1);
  for (int g : alpha.support()) {
    if (g == Group::identity()) continue;
    for (const auto& J : subsets(n, p + 1)) {
      Polynomial acc(n);
      for (std::size_t i = 0; i <= p; ++i) {
        IndexSet rest;
        for (std::size_t k = 0; k <= p; ++k)
          if (k != i) rest.push_back(J[k]);
        Polynomial a = alpha.value(g, rest);
        if (a.is_zero()) continue;
        Vector e = unit(n, J[i]);
        Polynomial factor = Polynomial::linear(e - G.act(g, e));
        if (i % 2 == 0) {
          acc += a * factor;
        } else {
          acc -= a * factor;
        }
      }
      out.add(g, J, acc);
    }
  }
  return out;
}

Cochain bracket(const Cochain& alpha, const Cochain& beta) {
  if (alpha.degree() != 2 || beta.degree() != 2)
    throw std::invalid_argument("the cochain bracket is defined on 2-cochains");
  if (alpha.max_poly_degree() > 1 || beta.max_poly_degree() > 1)
    throw std::invalid_argument("the cochain bracket needs polynomial degree at most 1");
  Cochain aL = alpha.part(1), aC = alpha.part(0), bL = beta.part(1), bC = beta.part(0);
  return bracket_term(aL, bL) + bracket_term(bL, aL) + bracket_term(aC, bL) + bracket_term(bC, aL);
}

bool is_cocycle(const Cochain& alpha) { return differential(alpha).is_zero(); }

std::optional<Cochain> is_coboundary(const Cochain& gamma) {
  const std::size_t p = gamma.degree();
  if (p == 0) throw std::invalid_argument("is_coboundary needs degree at least 1");
  const int q = std::max(gamma.poly_bound(), gamma.max_poly_degree());
  Cochain rho(gamma.group_ptr(), p - 1, std::max(q - 1, 0));
  if (gamma.is_zero()) return rho;
  if (q < 1) return std::nullopt;
  // d* preserves the group component, so each element is solved separately.
  for (int g : gamma.support()) {
    if (g == Group::identity()) return std::nullopt;
    CochainSpace source(gamma.group_ptr(), p - 1, 0, q - 1, {g});
    CochainSpace target(gamma.group_ptr(), p, 0, q, {g});
    Matrix a(target.size(), source.size());
    for (std::size_t k = 0; k < source.size(); ++k) {
      Vector col = target.coordinates(differential(source.basis(k)));
      for (std::size_t r = 0; r < target.size(); ++r) a(r, k) = col[r];
    }
    Cochain part(gamma.group_ptr(), p, q);
    for (const auto& [key, v] : gamma.entries())
      if (key.first == g) part.set(key.first, key.second, v);
    auto sol = solve_affine(a, target.coordinates(part));
    if (!sol) return std::nullopt;
    rho += source.element(sol->particular);
  }
  return rho;
}

Cochain act(int h, const Cochain& alpha) {
  const Group& G = alpha.group();
  const std::size_t n = G.dim();
  Cochain out(alpha.group_ptr(), alpha.degree(), alpha.poly_bound());
  const Matrix& hinv = G.matrix(G.inverse(h));
  for (int g : alpha.support()) {
    int c = G.conjugate_by(h, g);
    for (const auto& J : subsets(n, alpha.degree())) {
      std::vector<Vector> vs;
      for (auto j : J) vs.push_back(hinv.column(j));
      out.add(c, J, orbifold::act(G, h, alpha.evaluate(g, vs)));
    }
  }
  return out;
}

Cochain average(const Cochain& alpha) {
  const Group& G = alpha.group();
  Cochain out(alpha.group_ptr(), alpha.degree(), alpha.poly_bound());
  for (std::size_t h = 0; h < G.order(); ++h) out += act(static_cast<int>(h), alpha);
  out *= Scalar(Rational(1, static_cast<long>(G.order())));
  return out;
}

bool is_invariant(const Cochain& alpha) {
  const Group& G = alpha.group();
  for (int h : G.generator_indices())
    if (!(act(h, alpha) == alpha)) return false;
  return true;
}

CochainSpace::CochainSpace(GroupPtr group, std::size_t p, int lo, int hi, std::vector<int> elements)
    : group_(std::move(group)), p_(p), hi_(hi) {
  if (elements.empty())
    for (std::size_t g = 0; g < group_->order(); ++g) elements.push_back(static_cast<int>(g));
  const std::size_t n = group_->dim();
  auto sets = subsets(n, p);
  auto monos = monomials_in_range(n, std::max(lo, 0), hi);
  for (int g : elements)
    for (const auto& J : sets)
      for (const auto& m : monos) {
        index_.emplace(std::make_tuple(g, J, m), coords_.size());
        coords_.push_back(Coord{g, J, m});
      }
}

Vector CochainSpace::coordinates(const Cochain& alpha) const {
  Vector x(coords_.size());
  for (const auto& [key, poly] : alpha.entries())
    for (const auto& [mono, c] : poly.terms()) {
      auto it = index_.find(std::make_tuple(key.first, key.second, mono));
      if (it == index_.end()) throw std::invalid_argument("cochain has terms outside the coordinate space");
      x[it->second] = c;
    }
  return x;
}

Cochain CochainSpace::element(const Vector& x) const {
  Cochain out(group_, p_, std::max(hi_, 0));
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (!x[k].is_zero()) out.add(coords_[k].g, coords_[k].set, Polynomial::monomial(coords_[k].mono, x[k]));
  return out;
}

Cochain CochainSpace::basis(std::size_t k) const {
  Cochain out(group_, p_, std::max(hi_, 0));
  out.set(coords_[k].g, coords_[k].set, Polynomial::monomial(coords_[k].mono));
  return out;
}

std::size_t RepresentativeSpace::total_dimension() const {
  std::size_t d = 0;
  for (const auto& b : per_element) d += b.size();
  return d;
}

bool RepresentativeSpace::contains_invariant(const Cochain& alpha) const {
  try {
    return invariant_span.contains(space->coordinates(alpha));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool RepresentativeSpace::contains(const Cochain& alpha) const {
  try {
    return span.contains(space->coordinates(alpha));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

RepresentativeSpace representative_space(const GroupPtr& group, std::size_t p, int q, bool homogeneous) {
  const Group& G = *group;
  const std::size_t n = G.dim();
  RepresentativeSpace rs;
  rs.p = p;
  rs.q = q;
  rs.homogeneous = homogeneous;
  rs.per_element.resize(G.order());
  const int lo = homogeneous ? q : 0;

  for (std::size_t gi = 0; gi < G.order(); ++gi) {
    const int g = static_cast<int>(gi);
    const auto& fixed = G.fixed_space(g).basis();
    const auto& perp = G.perp_space(g).basis();
    const std::size_t f = fixed.size(), c = perp.size();
    if (p < c || p - c > f) continue;
    Matrix basis(n, n);
    for (std::size_t k = 0; k < f; ++k)
      for (std::size_t r = 0; r < n; ++r) basis(r, k) = fixed[k][r];
    for (std::size_t k = 0; k < c; ++k)
      for (std::size_t r = 0; r < n; ++r) basis(r, f + k) = perp[k][r];
    Matrix dual = inverse(basis);  // row k is the functional dual to basis vector k

    std::vector<Polynomial> fixed_linear;
    for (const auto& b : fixed) fixed_linear.push_back(Polynomial::linear(b));

    for (const auto& A : subsets(f, p - c)) {
      IndexSet K = A;
      for (std::size_t k = 0; k < c; ++k) K.push_back(f + k);
      for (const auto& m : monomials_in_range(f, lo, q)) {
        Polynomial coeff = Polynomial::constant(n, 1);
        for (std::size_t i = 0; i < f; ++i)
          for (int e = 0; e < m[i]; ++e) coeff = coeff * fixed_linear[i];
        Cochain alpha(group, p, q);
        for (const auto& J : subsets(n, p)) {
          Matrix minor(p, p);
          for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b) minor(a, b) = dual(K[a], J[b]);
          Scalar det = p == 0 ? Scalar(1) : determinant(minor);
          if (!det.is_zero()) alpha.set(g, J, det * coeff);
        }
        rs.per_element[gi].push_back(std::move(alpha));
      }
    }
  }

  auto space = std::make_shared<CochainSpace>(group, p, lo, q);
  rs.space = space;
  std::vector<Vector> all;
  for (const auto& b : rs.per_element)
    for (const auto& c : b) all.push_back(space->coordinates(c));
  rs.span = Subspace::from_spanning(space->size(), all);

  std::vector<Vector> invariant_vectors;
  for (const auto& cls : G.classes()) {
    std::vector<Vector> vecs;
    for (int g : cls)
      for (const auto& b : rs.per_element[g]) vecs.push_back(space->coordinates(average(b)));
    Subspace s = Subspace::from_spanning(space->size(), vecs);
    rs.class_dimensions.push_back(s.dim());
    invariant_vectors.insert(invariant_vectors.end(), s.basis().begin(), s.basis().end());
  }
  rs.invariant_span = Subspace::from_spanning(space->size(), invariant_vectors);
  for (const auto& v : rs.invariant_span.basis()) rs.invariant_basis.push_back(space->element(v));
  return rs;
}

Cochain linear_cochain(const KappaParameter& kappa) {
  Cochain out(kappa.group_ptr(), 2, 1);
  for (std::size_t g = 0; g < kappa.group().order(); ++g)
    for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
      auto [i, j] = kappa.pair_at(p);
      out.set(static_cast<int>(g), {i, j}, Polynomial::linear(kappa.at(static_cast<int>(g), i, j).linear));
    }
  return out;
}

Cochain constant_cochain(const KappaParameter& kappa) {
  Cochain out(kappa.group_ptr(), 2, 0);
  for (std::size_t g = 0; g < kappa.group().order(); ++g)
    for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
      auto [i, j] = kappa.pair_at(p);
      out.set(static_cast<int>(g), {i, j},
              Polynomial::constant(kappa.dim(), kappa.at(static_cast<int>(g), i, j).constant));
    }
  return out;
}

KappaParameter kappa_from_cochains(const Cochain& linear, const Cochain& constant) {
  KappaParameter k(linear.group_ptr());
  for (const auto& [key, v] : linear.entries())
    k.add(key.first, key.second[0], key.second[1], Scalar(), v.linear_part());
  for (const auto& [key, v] : constant.entries())
    k.add(key.first, key.second[0], key.second[1], v.constant_term(), Vector(k.dim()));
  return k;
}

Cochain gauge_cochain(const GaugeMap& rho) {
  const Group& G = rho.group();
  Cochain out(rho.group_ptr(), 1, 0);
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < G.dim(); ++i)
      out.set(static_cast<int>(g), {i}, Polynomial::constant(G.dim(), rho(i, static_cast<int>(g))));
  return out;
}

}  // namespace orbifold
