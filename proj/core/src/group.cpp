#include "orbifold/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "orbifold/expression.hpp"

namespace orbifold {

namespace {

constexpr std::size_t kBuckets = 1 << 12;

Matrix leading_block(const Matrix& m, std::size_t dim) {
  Matrix b(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) b(r, c) = m(r, c);
  return b;
}

struct WordSemantics {
  using Value = int;
  const Group& group;

  Value integer(const mpz_class& z, std::size_t at) {
    if (z != 1) throw ParseError(ParseError::Kind::Domain, at, "only 1 may appear as a group word literal");
    return Group::identity();
  }
  Value root_of_unity(int, std::size_t at) {
    throw ParseError(ParseError::Kind::Domain, at, "roots of unity are not group elements");
  }
  Value identifier(std::string_view name, std::size_t at) {
    const auto& names = group.generator_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return group.generator_indices()[i];
    throw ParseError(ParseError::Kind::UnknownSymbol, at, "unknown generator '" + std::string(name) + "'");
  }
  [[noreturn]] Value add(Value, Value) {
    throw ParseError(ParseError::Kind::Syntax, 0, "sums are not group words");
  }
  [[noreturn]] Value subtract(Value, Value) {
    throw ParseError(ParseError::Kind::Syntax, 0, "differences are not group words");
  }
  [[noreturn]] Value negate(Value) { throw ParseError(ParseError::Kind::Syntax, 0, "negation is not a group word"); }
  Value multiply(Value a, Value b, std::size_t) { return group.multiply(a, b); }
  Value divide(Value a, Value b, std::size_t) { return group.multiply(a, group.inverse(b)); }
  Value power(Value a, long e, std::size_t) { return group.power(a, e); }
};

}  // namespace

GroupPtr generate_group(const std::vector<Matrix>& generators, std::size_t dim, const GroupOptions& options) {
  std::size_t full_dim = dim;
  for (const auto& g : generators) {
    if (g.rows() != g.cols()) throw std::invalid_argument("generator is not square");
    full_dim = std::max(full_dim, g.rows());
  }
  for (const auto& g : generators) {
    if (g.rows() != full_dim) throw std::invalid_argument("generators have inconsistent sizes");
    if (determinant(g).is_zero()) throw std::invalid_argument("singular generator " + g.to_string());
  }
  if (!options.generator_names.empty() && options.generator_names.size() != generators.size())
    throw std::invalid_argument("generator name count does not match generator count");

  auto group = std::shared_ptr<Group>(new Group());
  Group& G = *group;
  G.dim_ = dim;
  G.buckets_.assign(kBuckets, {});
  auto insert = [&G](Matrix m) {
    G.buckets_[m.hash() % kBuckets].push_back(G.elements_.size());
    G.elements_.push_back(std::move(m));
    return static_cast<int>(G.elements_.size() - 1);
  };
  insert(Matrix::identity(full_dim));

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      Matrix next = G.elements_[cur] * gen;
      if (G.find(next) >= 0) continue;
      if (G.elements_.size() >= options.max_order)
        throw GroupTooLarge("group exceeds " + std::to_string(options.max_order) + " elements");
      queue.push_back(insert(std::move(next)));
    }
  }

  for (std::size_t i = 0; i < generators.size(); ++i) {
    G.generators_.push_back(G.find(generators[i]));
    G.names_.push_back(options.generator_names.empty() ? "g" + std::to_string(i + 1)
                                                       : options.generator_names[i]);
  }
  G.build_tables();
  return group;
}

int Group::find(const Matrix& full) const {
  for (std::size_t idx : buckets_[full.hash() % kBuckets])
    if (elements_[idx] == full) return static_cast<int>(idx);
  return -1;
}

int Group::power(int g, long e) const {
  if (e < 0) {
    g = inverse(g);
    e = -e;
  }
  int result = identity();
  for (long i = 0; i < e; ++i) result = multiply(result, g);
  return result;
}

bool Group::is_abelian() const {
  for (std::size_t g = 0; g < order(); ++g)
    if (centralizers_[g].size() != order()) return false;
  return true;
}

void Group::build_tables() {
  const std::size_t n = order();
  for (const auto& m : elements_) action_.push_back(leading_block(m, dim_));

  cayley_.assign(n * n, -1);
  inverses_.assign(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      int p = find(elements_[g] * elements_[h]);
      if (p < 0) throw std::logic_error("group closure is incomplete");
      cayley_[g * n + h] = p;
      if (p == 0) inverses_[g] = static_cast<int>(h);
    }
  }

  class_index_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (class_index_[g] != n) continue;
    std::vector<int> cls;
    for (std::size_t h = 0; h < n; ++h) {
      int c = conjugate_by(static_cast<int>(h), static_cast<int>(g));
      if (class_index_[c] == n) {
        class_index_[c] = classes_.size();
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }

  centralizers_.resize(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (cayley_[g * n + h] == cayley_[h * n + g]) centralizers_[g].push_back(static_cast<int>(h));

  for (std::size_t g = 0; g < n; ++g)
    if (action_[g].is_identity()) kernel_.push_back(static_cast<int>(g));

  form_ = Matrix(dim_, dim_);
  for (const auto& m : action_) form_ = form_ + m.adjoint() * m;
  Scalar inv_order = Scalar(Rational(1, static_cast<long>(n)));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) form_(r, c) *= inv_order;

  Matrix id = Matrix::identity(dim_);
  for (std::size_t g = 0; g < n; ++g) {
    fixed_.push_back(nullspace(action_[g] - id));
    std::vector<Vector> functionals;
    for (const auto& b : fixed_.back().basis()) {
      Vector bc(dim_);
      for (std::size_t i = 0; i < dim_; ++i) bc[i] = b[i].conjugate();
      Vector row(dim_);
      for (std::size_t c = 0; c < dim_; ++c)
        for (std::size_t i = 0; i < dim_; ++i) row[c] += bc[i] * form_(i, c);
      functionals.push_back(std::move(row));
    }
    perp_.push_back(functionals.empty() ? Subspace::full(dim_)
                                        : nullspace(Matrix::from_rows(functionals, dim_)));
  }

  // Shortest words by breadth-first search over right multiplication.
  words_.assign(n, "");
  std::vector<bool> seen(n, false);
  words_[0] = "1";
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      int next = multiply(cur, generators_[i]);
      if (seen[next]) continue;
      seen[next] = true;
      words_[next] = cur == 0 ? names_[i] : words_[cur] + "*" + names_[i];
      queue.push_back(next);
    }
  }
}

int Group::parse_word(std::string_view text) const {
  WordSemantics sem{*this};
  return ExpressionParser<WordSemantics>(text, sem).parse();
}

}  // namespace orbifold
