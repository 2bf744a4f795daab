#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbifold/kappa.hpp"
#include "orbifold/pbw.hpp"

namespace orbifold {

/// A letter is a basis index i >= 0 for v_i, or -g for a non-identity group
/// element g. The identity element is never written.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter group_letter(int g) { return -g; }
inline bool is_group_letter(Letter l) { return l < 0; }

/// Shorter words first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of T(V)#G with coefficients in k[t].
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement word(Word w, const TPolynomial& c = Scalar(1));
  static FreeElement vector(const Vector& v);
  static FreeElement group(int g);
  static FreeElement from_pbw(const PbwElement& p);

  const std::map<Word, TPolynomial, WordOrder>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Word& w, const TPolynomial& c);

  FreeElement& operator+=(const FreeElement& rhs);
  FreeElement& operator-=(const FreeElement& rhs);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  /// Concatenation product.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const Scalar& s, const FreeElement& a);

 private:
  std::map<Word, TPolynomial, WordOrder> terms_;
};

/// Parses an expression over basis names and generator names, e.g.
/// "y*x", "g1*x - 2*E(3)*z^2". Throws ParseError.
FreeElement parse_free_element(std::string_view text, const Group& group, const std::vector<std::string>& basis_names,
                               const CyclotomicContext& ctx);

struct Ambiguity {
  Word word;
  PbwElement left;
  PbwElement right;
};

struct OverlapResult {
  bool confluent = true;
  std::vector<Ambiguity> failures;
  std::size_t ambiguities_checked = 0;
};

/// Rewriting system for H_kappa (or H_{kappa,t} when graded) with rules
///   g h -> (gh),  g v_i -> sum_j M_ji(g) v_j g,
///   v_b v_a -> v_a v_b - kappa^L(v_a, v_b) t^{e1} - kappa^C(v_a, v_b) t^{e2}  (b > a)
/// where (e1, e2) = (1, 2) when graded and (0, 0) otherwise.
class Rewriter {
 public:
  Rewriter(const KappaParameter& kappa, bool graded_t);

  const KappaParameter& kappa() const noexcept { return kappa_; }
  bool graded() const noexcept { return graded_; }

  /// Reduces with the leftmost redex first until only PBW words remain.
  PbwElement normal_form(const FreeElement& x) const;
  PbwElement multiply(const PbwElement& a, const PbwElement& b) const;

  /// Resolves every ambiguity g h k, g h v_i, g v_b v_a and v_c v_b v_a
  /// (c > b > a) both ways and compares normal forms.
  OverlapResult overlap_check(bool stop_at_first = false) const;

  /// The free element kappa(v_i, v_j) (t-powers included when graded).
  FreeElement kappa_element(std::size_t i, std::size_t j) const;
  /// Normal form of sum_cyc v_i kappa(v_j, v_k) - kappa(v_j, v_k) v_i.
  PbwElement jacobi_residue(std::size_t i, std::size_t j, std::size_t k) const;
  /// Normal form of h kappa(v_i, v_j) h^{-1} - kappa(^h v_i, ^h v_j).
  PbwElement conjugation_residue(int h, std::size_t i, std::size_t j) const;

  /// Total rule applications so far.
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  struct Pending;
  bool reduce_once(const Word& w, const TPolynomial& c, Pending& pending) const;
  Word group_word(int g) const { return g == Group::identity() ? Word{} : Word{group_letter(g)}; }

  KappaParameter kappa_;
  bool graded_;
  std::size_t n_;
  // image_[g][i]: nonzero (j, M_ji(g)).
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> image_;
  // swap_[a * n + b] for a < b: the correction terms of v_b v_a.
  std::vector<std::vector<std::pair<Word, TPolynomial>>> swap_;
  mutable std::atomic<std::uint64_t> steps_{0};
};

/// Re-evaluates a condition witness through the rewriter (graded t):
/// the g-component of the Jacobi residue at the t-power belonging to the
/// condition for (ii)-(iv), or the conjugation residue for (i).
PbwElement witness_residue(const Rewriter& graded_rewriter, const Witness& w);

/// |G| * sum_{e <= d} C(n+e-1, e), after checking that the normal forms of
/// all words of length <= d (times any g) span exactly the PBW monomials of
/// degree <= d. Throws std::logic_error if kappa is not confluent or the
/// check fails.
std::size_t graded_dimension(const KappaParameter& kappa, int d);

}  // namespace orbifold
