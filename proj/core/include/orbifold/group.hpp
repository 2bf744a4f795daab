#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbifold/linalg.hpp"

namespace orbifold {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Thrown by generate_group when the closure exceeds the element cap.
class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupOptions {
  std::size_t max_order = 10000;
  /// Display names of the generators; defaults to g1, g2, ...
  std::vector<std::string> generator_names;
};

/// Generates the finite group spanned by `generators` acting on V = k^dim.
///
/// A generator may be a larger block-diagonal matrix whose leading dim x dim
/// block is the action on V. The trailing block only distinguishes group
/// elements, which is how non-faithful actions are described.
GroupPtr generate_group(const std::vector<Matrix>& generators, std::size_t dim,
                        const GroupOptions& options = {});

/// A finite matrix group. Elements are addressed by index; index 0 is the
/// identity and indices follow breadth-first discovery order.
class Group {
 public:
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  static constexpr int identity() noexcept { return 0; }

  /// Action on V.
  const Matrix& matrix(int g) const { return action_[g]; }
  /// The full generating representation, including any hidden block.
  const Matrix& full_matrix(int g) const { return elements_[g]; }

  int multiply(int g, int h) const { return cayley_[g * order() + h]; }
  int inverse(int g) const { return inverses_[g]; }
  /// h g h^{-1}
  int conjugate_by(int h, int g) const { return multiply(multiply(h, g), inverse(h)); }
  int power(int g, long e) const;

  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
  std::size_t class_of(int g) const { return class_index_[g]; }
  /// Least element index in the class of g.
  int representative(int g) const { return classes_[class_index_[g]].front(); }
  const std::vector<int>& centralizer(int g) const { return centralizers_[g]; }
  const std::vector<int>& kernel() const noexcept { return kernel_; }
  bool in_kernel(int g) const { return action_[g].is_identity(); }
  bool is_abelian() const;

  /// Hermitian form averaged over G: H = (1/|G|) sum g* g.
  const Matrix& invariant_form() const noexcept { return form_; }
  const Subspace& fixed_space(int g) const { return fixed_[g]; }
  const Subspace& perp_space(int g) const { return perp_[g]; }
  std::size_t codim(int g) const { return dim_ - fixed_[g].dim(); }

  /// ^g v
  Vector act(int g, const Vector& v) const { return action_[g] * v; }

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<int>& generator_indices() const noexcept { return generators_; }
  /// A shortest word in the generators, e.g. "g1*h"; "1" for the identity.
  const std::string& word(int g) const { return words_[g]; }
  /// Resolves a word such as "g1*h^2" or "g1^-1" through the Cayley table.
  /// Throws ParseError.
  int parse_word(std::string_view text) const;
  /// Index of the element with the given full matrix, or -1.
  int find(const Matrix& full) const;

 private:
  friend GroupPtr generate_group(const std::vector<Matrix>&, std::size_t, const GroupOptions&);
  Group() = default;
  void build_tables();

  std::size_t dim_ = 0;
  std::vector<Matrix> elements_;
  std::vector<Matrix> action_;
  std::vector<int> cayley_;
  std::vector<int> inverses_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::size_t> class_index_;
  std::vector<std::vector<int>> centralizers_;
  std::vector<int> kernel_;
  Matrix form_;
  std::vector<Subspace> fixed_;
  std::vector<Subspace> perp_;
  std::vector<std::string> names_;
  std::vector<int> generators_;
  std::vector<std::string> words_;
  std::vector<std::vector<std::size_t>> buckets_;  // hash buckets for find()
};

}  // namespace orbifold
