#include "orbifold/rewrite.hpp"

#include <set>
#include <stdexcept>

#include "orbifold/expression.hpp"

namespace orbifold {

namespace {

constexpr std::uint64_t kStepLimit = 50'000'000;

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Word splice(const Word& w, std::size_t p, const Word& middle) {
  Word out(w.begin(), w.begin() + static_cast<long>(p));
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), w.begin() + static_cast<long>(p) + 2, w.end());
  return out;
}

}  // namespace

FreeElement FreeElement::word(Word w, const TPolynomial& c) {
  FreeElement f;
  f.add(w, c);
  return f;
}

FreeElement FreeElement::vector(const Vector& v) {
  FreeElement f;
  for (std::size_t i = 0; i < v.size(); ++i) f.add({static_cast<Letter>(i)}, v[i]);
  return f;
}

FreeElement FreeElement::group(int g) {
  return word(g == Group::identity() ? Word{} : Word{group_letter(g)});
}

FreeElement FreeElement::from_pbw(const PbwElement& p) {
  FreeElement f;
  for (const auto& [key, c] : p.terms()) {
    Word w;
    for (std::size_t i = 0; i < key.first.size(); ++i)
      for (int k = 0; k < key.first[i]; ++k) w.push_back(static_cast<Letter>(i));
    if (key.second != Group::identity()) w.push_back(group_letter(key.second));
    f.add(w, c);
  }
  return f;
}

void FreeElement::add(const Word& w, const TPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(concat({&wa, &wb}), ca * cb);
  return out;
}

FreeElement operator*(const Scalar& s, const FreeElement& a) {
  FreeElement out;
  for (const auto& [w, c] : a.terms_) out.add(w, c * TPolynomial(s));
  return out;
}

namespace {

struct FreeSemantics {
  using Value = FreeElement;
  const Group& group;
  const std::vector<std::string>& names;
  const CyclotomicContext& ctx;

  static std::optional<Scalar> as_scalar(const Value& v) {
    if (v.is_zero()) return Scalar();
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [w, c] = *v.terms().begin();
    if (!w.empty() || c.terms().size() != 1 || c.terms().begin()->first != 0) return std::nullopt;
    return c.terms().begin()->second;
  }

  Value integer(const mpz_class& z, std::size_t) { return FreeElement::word({}, Scalar(Rational(z))); }
  Value root_of_unity(int n, std::size_t at) {
    if (ctx.order() % n != 0)
      throw ParseError(ParseError::Kind::RootOrder, at, "E(" + std::to_string(n) + ") is outside the field");
    return FreeElement::word({}, Scalar::root_of_unity(ctx, n));
  }
  Value identifier(std::string_view name, std::size_t at) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return FreeElement::word({static_cast<Letter>(i)});
    const auto& gens = group.generator_names();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) return FreeElement::group(group.generator_indices()[i]);
    throw ParseError(ParseError::Kind::UnknownSymbol, at, "unknown symbol '" + std::string(name) + "'");
  }
  Value add(Value a, const Value& b) { return a += b; }
  Value subtract(Value a, const Value& b) { return a -= b; }
  Value negate(const Value& a) { return Scalar(-1) * a; }
  Value multiply(const Value& a, const Value& b, std::size_t) { return a * b; }
  Value divide(const Value& a, const Value& b, std::size_t at) {
    auto s = as_scalar(b);
    if (!s) throw ParseError(ParseError::Kind::Domain, at, "can only divide by a scalar");
    if (s->is_zero()) throw ParseError(ParseError::Kind::DivisionByZero, at, "division by zero");
    return s->inverse() * a;
  }
  Value power(const Value& a, long e, std::size_t at) {
    if (e < 0) {
      if (auto s = as_scalar(a)) {
        if (s->is_zero()) throw ParseError(ParseError::Kind::DivisionByZero, at, "zero to a negative power");
        return FreeElement::word({}, s->pow(e));
      }
      // A single group letter may be inverted.
      if (a.terms().size() == 1) {
        const auto& [w, c] = *a.terms().begin();
        if (w.size() == 1 && is_group_letter(w[0]) && c == TPolynomial(Scalar(1)))
          return FreeElement::group(group.power(-w[0], e));
      }
      throw ParseError(ParseError::Kind::Domain, at, "negative powers need a scalar or a group element");
    }
    Value out = FreeElement::word({});
    for (long k = 0; k < e; ++k) out = out * a;
    return out;
  }
};

}  // namespace

FreeElement parse_free_element(std::string_view text, const Group& group, const std::vector<std::string>& basis_names,
                               const CyclotomicContext& ctx) {
  FreeSemantics sem{group, basis_names, ctx};
  return ExpressionParser<FreeSemantics>(text, sem).parse();
}

// Longest words first, so contributions to a word are merged before it is
// rewritten.
struct Rewriter::Pending {
  struct Desc {
    bool operator()(const Word& a, const Word& b) const { return WordOrder{}(b, a); }
  };
  std::map<Word, TPolynomial, Desc> terms;

  void add(const Word& w, const TPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

Rewriter::Rewriter(const KappaParameter& kappa, bool graded_t)
    : kappa_(kappa), graded_(graded_t), n_(kappa.dim()) {
  const Group& G = kappa.group();
  image_.resize(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    image_[g].resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const Scalar& m = G.matrix(static_cast<int>(g))(j, i);
        if (!m.is_zero()) image_[g][i].emplace_back(static_cast<int>(j), m);
      }
  }
  swap_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) {
      FreeElement k = kappa_element(a, b);
      for (const auto& [w, c] : k.terms()) swap_[a * n_ + b].emplace_back(w, -c);
    }
}

FreeElement Rewriter::kappa_element(std::size_t i, std::size_t j) const {
  const Group& G = kappa_.group();
  const int e1 = graded_ ? 1 : 0, e2 = graded_ ? 2 : 0;
  FreeElement out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    KappaValue kv = kappa_.at(static_cast<int>(g), i, j);
    Word gw = group_word(static_cast<int>(g));
    out.add(gw, TPolynomial(kv.constant, e2));
    for (std::size_t l = 0; l < n_; ++l) {
      Word w{static_cast<Letter>(l)};
      w.insert(w.end(), gw.begin(), gw.end());
      out.add(w, TPolynomial(kv.linear[l], e1));
    }
  }
  return out;
}

bool Rewriter::reduce_once(const Word& w, const TPolynomial& c, Pending& pending) const {
  const Group& G = kappa_.group();
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    Letter a = w[p], b = w[p + 1];
    if (is_group_letter(a) && is_group_letter(b)) {
      pending.add(splice(w, p, group_word(G.multiply(-a, -b))), c);
      return true;
    }
    if (is_group_letter(a)) {
      for (const auto& [j, m] : image_[-a][b]) pending.add(splice(w, p, {j, a}), c * TPolynomial(m));
      return true;
    }
    if (!is_group_letter(b) && a > b) {
      pending.add(splice(w, p, {b, a}), c);
      for (const auto& [corr, k] : swap_[b * n_ + a]) pending.add(splice(w, p, corr), c * k);
      return true;
    }
  }
  return false;
}

PbwElement Rewriter::normal_form(const FreeElement& x) const {
  Pending pending;
  for (const auto& [w, c] : x.terms()) pending.add(w, c);
  PbwElement out(n_);
  std::uint64_t local = 0;
  while (!pending.terms.empty()) {
    auto it = pending.terms.begin();
    Word w = it->first;
    TPolynomial c = std::move(it->second);
    pending.terms.erase(it);
    if (reduce_once(w, c, pending)) {
      if (++local > kStepLimit) throw std::runtime_error("rewriting exceeded the step limit");
      continue;
    }
    Exponents e(n_, 0);
    int g = Group::identity();
    for (Letter l : w) {
      if (is_group_letter(l)) {
        g = -l;
      } else {
        ++e[l];
      }
    }
    out.add(e, g, c);
  }
  steps_ += local;
  return out;
}

PbwElement Rewriter::multiply(const PbwElement& a, const PbwElement& b) const {
  return normal_form(FreeElement::from_pbw(a) * FreeElement::from_pbw(b));
}

OverlapResult Rewriter::overlap_check(bool stop_at_first) const {
  const Group& G = kappa_.group();
  const int m = static_cast<int>(G.order());
  OverlapResult res;
  auto record = [&](Word word, const FreeElement& l, const FreeElement& r) {
    ++res.ambiguities_checked;
    PbwElement nl = normal_form(l), nr = normal_form(r);
    if (nl == nr) return false;
    res.confluent = false;
    res.failures.push_back(Ambiguity{std::move(word), std::move(nl), std::move(nr)});
    return stop_at_first;
  };
  auto fw = [](const Word& w) { return FreeElement::word(w); };
  auto corrections = [&](std::size_t a, std::size_t b, const Word& before, const Word& after) {
    FreeElement f;
    for (const auto& [corr, k] : swap_[a * n_ + b]) f.add(concat({&before, &corr, &after}), k);
    return f;
  };
  const Word none;

  for (int c = 0; c < static_cast<int>(n_); ++c)
    for (int b = 0; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        Word vc{c}, va{a};
        FreeElement left = fw({b, c, a}) + corrections(b, c, none, va);
        FreeElement right = fw({c, a, b}) + corrections(a, b, vc, none);
        if (record({c, b, a}, left, right)) return res;
      }

  for (int g = 1; g < m; ++g) {
    Word gw = group_word(g);
    for (int b = 0; b < static_cast<int>(n_); ++b)
      for (int a = 0; a < b; ++a) {
        FreeElement left;
        for (const auto& [j, coef] : image_[g][b]) left.add({j, group_letter(g), a}, coef);
        FreeElement right = fw({group_letter(g), a, b}) + corrections(a, b, gw, none);
        if (record({group_letter(g), b, a}, left, right)) return res;
      }
  }

  for (int g = 1; g < m; ++g)
    for (int h = 1; h < m; ++h) {
      Word gw = group_word(g), hw = group_word(h);
      for (int i = 0; i < static_cast<int>(n_); ++i) {
        Word vi{i};
        Word ghw = group_word(G.multiply(g, h));
        FreeElement left = fw(concat({&ghw, &vi}));
        FreeElement right;
        for (const auto& [j, coef] : image_[h][i]) {
          Word vj{j};
          right.add(concat({&gw, &vj, &hw}), coef);
        }
        if (record({group_letter(g), group_letter(h), i}, left, right)) return res;
      }
      for (int k = 1; k < m; ++k) {
        Word kw = group_word(k);
        Word ghw = group_word(G.multiply(g, h)), hkw = group_word(G.multiply(h, k));
        if (record({group_letter(g), group_letter(h), group_letter(k)}, fw(concat({&ghw, &kw})),
                   fw(concat({&gw, &hkw}))))
          return res;
      }
    }
  return res;
}

PbwElement Rewriter::jacobi_residue(std::size_t i, std::size_t j, std::size_t k) const {
  FreeElement sum;
  const std::size_t idx[3] = {i, j, k};
  for (int r = 0; r < 3; ++r) {
    FreeElement v = FreeElement::word({static_cast<Letter>(idx[r])});
    FreeElement kv = kappa_element(idx[(r + 1) % 3], idx[(r + 2) % 3]);
    sum += v * kv;
    sum -= kv * v;
  }
  return normal_form(sum);
}

PbwElement Rewriter::conjugation_residue(int h, std::size_t i, std::size_t j) const {
  const Group& G = kappa_.group();
  FreeElement conj = FreeElement::group(h) * kappa_element(i, j) * FreeElement::group(G.inverse(h));
  // kappa(^h v_i, ^h v_j) expanded bilinearly.
  for (const auto& [a, ca] : image_[h][i])
    for (const auto& [b, cb] : image_[h][j]) {
      if (a == b) continue;
      conj -= (ca * cb) * kappa_element(a, b);
    }
  return normal_form(conj);
}

PbwElement witness_residue(const Rewriter& rw, const Witness& w) {
  const Group& G = rw.kappa().group();
  PbwElement full;
  int component = w.g;
  int tpow = 0;
  if (w.condition == Condition::Invariance) {
    full = rw.conjugation_residue(*w.h, w.indices[0], w.indices[1]);
    component = G.conjugate_by(*w.h, w.g);
    tpow = -1;
  } else {
    // kappa^L enters at t, kappa^C at t^2: (ii) sits at t, (iii) at t^2, (iv) at t^3.
    tpow = static_cast<int>(w.condition);
    full = rw.jacobi_residue(w.indices[0], w.indices[1], w.indices[2]);
  }
  PbwElement out(rw.kappa().dim());
  for (const auto& [key, c] : full.terms()) {
    if (key.second != component) continue;
    if (tpow < 0) {
      out.add(key.first, key.second, c);
    } else {
      out.add(key.first, key.second, TPolynomial(c.coefficient(tpow), tpow));
    }
  }
  return out;
}

std::size_t graded_dimension(const KappaParameter& kappa, int d) {
  Rewriter rw(kappa, false);
  if (!rw.overlap_check(true).confluent)
    throw std::logic_error("graded_dimension needs a confluent (PBW) parameter");
  const Group& G = kappa.group();
  const std::size_t n = kappa.dim();

  std::set<PbwElement::Key> expected;
  for (const auto& e : monomials_in_range(n, 0, d))
    for (std::size_t g = 0; g < G.order(); ++g) expected.emplace(e, static_cast<int>(g));

  std::set<PbwElement::Key> produced;
  Word w;
  auto visit = [&](auto&& self, int len) -> void {
    for (std::size_t g = 0; g < G.order(); ++g) {
      Word full = w;
      if (g != 0) full.push_back(group_letter(static_cast<int>(g)));
      PbwElement nf = rw.normal_form(FreeElement::word(full));
      for (const auto& [key, c] : nf.terms()) produced.insert(key);
    }
    if (len == d) return;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(static_cast<Letter>(i));
      self(self, len + 1);
      w.pop_back();
    }
  };
  visit(visit, 0);
  if (produced != expected) throw std::logic_error("normal forms do not span the PBW monomials");
  return expected.size();
}

}  // namespace orbifold
