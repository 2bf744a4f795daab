#pragma once

#include <random>
#include <string>
#include <vector>

#include "orbifold/cli/spec_io.hpp"
#include "orbifold/cohomology.hpp"
#include "orbifold/kappa.hpp"

namespace orbifold::testing {

using Rng = std::mt19937_64;

std::string spec_path(const std::string& name);
cli::ProblemSpec load_bundled(const std::string& name);
/// klein, s3, sl2, klein_bad
const std::vector<std::string>& golden_specs();

struct GroupCase {
  std::string label;
  GroupPtr group;
};

/// Matrix groups of order <= 6 on n <= 3, including non-abelian and
/// non-rational ones.
std::vector<GroupCase> small_groups();
/// Abelian groups of order <= 8 acting diagonally on n <= 3, some of them
/// through a hidden block (non-faithful).
std::vector<GroupCase> abelian_diagonal_groups();

Scalar small_scalar(Rng& rng, int bound = 2);

struct KappaCase {
  std::string label;
  KappaParameter kappa;
};

/// Random kappa over small_groups(). Roughly half are built to satisfy the
/// PBW conditions (solver output, optionally gauge transformed), the rest
/// are perturbations of those or uniformly random.
std::vector<KappaCase> random_kappa_corpus(std::uint64_t seed, std::size_t count);

/// Random cochain of degree p with values of polynomial degree <= q.
Cochain random_cochain(const GroupPtr& group, std::size_t p, int q, Rng& rng, double density = 0.5);
/// Random G-invariant linear cochain in the representative space H^2.
Cochain random_invariant_h2(const GroupPtr& group, Rng& rng);
/// Restriction of a cochain to the given support.
Cochain restrict_support(const Cochain& alpha, const std::vector<bool>& keep);

}  // namespace orbifold::testing
