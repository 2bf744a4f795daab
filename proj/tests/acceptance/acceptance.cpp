// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "orbifold/cohomology.hpp"
#include "orbifold/rewrite.hpp"
#include "orbifold/solver.hpp"

using namespace orbifold;
using namespace orbifold::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Outcome criterion1() {
  auto t0 = Clock::now();
  auto spec = load_bundled("klein");
  ConditionReport r = check_conditions(*spec.kappa);
  bool confluent = Rewriter(*spec.kappa, false).overlap_check().confluent;
  double t = seconds_since(t0);
  return {r.passed() && confluent && t < 1.0,
          "klein: conditions " + std::string(r.passed() ? "pass" : "fail") + ", overlap " +
              (confluent ? "confluent" : "not confluent") + ", " + fmt_time(t) + " (limit 1s)"};
}

Outcome criterion2() {
  auto t0 = Clock::now();
  auto spec = load_bundled("s3");
  ConditionReport r = check_conditions(*spec.kappa);
  double t = seconds_since(t0);
  return {r.passed() && t < 2.0,
          "s3: conditions " + std::string(r.passed() ? "pass" : "fail") + ", " + fmt_time(t) + " (limit 2s)"};
}

Outcome criterion3() {
  auto t0 = Clock::now();
  auto spec = load_bundled("sl2");
  bool conds = check_conditions(*spec.kappa).passed();
  bool lie = check_lie_orbifold(*spec.kappa).passed();
  ParameterSpace s = solve_constant_part(*spec.kappa);
  bool inside = s.contains(*spec.kappa);
  double t = seconds_since(t0);
  std::ostringstream d;
  d << "sl2: conditions " << (conds ? "pass" : "fail") << ", lie orbifold " << (lie ? "pass" : "fail")
    << ", constant-part dimension " << s.dimension() << ", (t1,t2)=(0,1) " << (inside ? "inside" : "outside") << ", "
    << fmt_time(t) << " (limit 2s)";
  return {conds && lie && s.dimension() == 2 && inside && t < 2.0, d.str()};
}

struct CorpusEntry {
  std::string label;
  KappaParameter kappa;
};

std::vector<CorpusEntry> oracle_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& name : golden_specs()) out.push_back({name, *load_bundled(name).kappa});
  for (auto& kc : random_kappa_corpus(20240601, 120)) out.push_back({kc.label, std::move(kc.kappa)});
  return out;
}

Outcome criterion4(const std::vector<CorpusEntry>& corpus) {
  std::size_t pass = 0, fail = 0, disagree = 0;
  std::string first;
  for (const auto& c : corpus) {
    bool conds = check_conditions(c.kappa).passed();
    bool confluent = Rewriter(c.kappa, false).overlap_check(true).confluent;
    (conds ? pass : fail)++;
    if (conds != confluent) {
      ++disagree;
      if (first.empty()) first = c.label;
    }
  }
  std::size_t random = corpus.size() - golden_specs().size();
  double fail_fraction = static_cast<double>(fail) / corpus.size();
  std::ostringstream d;
  d << corpus.size() << " parameters (" << random << " random over |G| <= 6, n <= 3): " << pass << " pass, " << fail
    << " fail, " << disagree << " disagreements";
  if (!first.empty()) d << " (first: " << first << ")";
  bool balanced = fail_fraction > 0.3 && fail_fraction < 0.7;
  return {disagree == 0 && random >= 100 && balanced, d.str()};
}

PbwElement random_monomial(std::mt19937_64& rng, const Group& G, int& degree) {
  Exponents e(G.dim(), 0);
  degree = static_cast<int>(rng() % 4);
  for (int k = 0; k < degree; ++k) ++e[rng() % G.dim()];
  return PbwElement::monomial(e, static_cast<int>(rng() % G.order()));
}

Outcome criterion5() {
  std::mt19937_64 rng(5150);
  std::size_t pairs = 0, violations = 0, coefficients = 0;
  for (const char* name : {"klein", "sl2"}) {
    auto spec = load_bundled(name);
    Rewriter rw(*spec.kappa, true);
    for (int it = 0; it < 50; ++it, ++pairs) {
      int dr = 0, ds = 0;
      PbwElement r = random_monomial(rng, *spec.group, dr), s = random_monomial(rng, *spec.group, ds);
      PbwElement prod = rw.multiply(r, s);
      for (int i = 0; i <= prod.max_t_degree(); ++i) {
        PbwElement c = prod.t_coefficient(i);
        for (const auto& [key, coeff] : c.terms()) {
          ++coefficients;
          int deg = 0;
          for (int x : key.first) deg += x;
          if (deg != dr + ds - i) ++violations;
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " monomial pairs (klein, sl2), " << coefficients << " terms checked, " << violations << " violations";
  return {pairs == 100 && violations == 0, d.str()};
}

Outcome criterion6(const std::vector<CorpusEntry>& corpus) {
  std::size_t ii = 0, iii = 0, iv = 0, in_h2 = 0, outside = 0, outside_mismatch = 0;
  std::map<const Group*, RepresentativeSpace> h2;
  for (const auto& c : corpus) {
    const KappaParameter& k = c.kappa;
    ConditionReport r = check_conditions(k);
    Cochain L = linear_cochain(k), C = constant_cochain(k);
    if (r[Condition::Linear].passed != differential(L).is_zero()) ++ii;
    auto it = h2.find(&k.group());
    if (it == h2.end()) it = h2.emplace(&k.group(), representative_space(k.group_ptr(), 2, 1, true)).first;
    bool iii_cochain = bracket(L, L) == Scalar(2) * differential(C);
    bool iv_cochain = bracket(C, L).is_zero();
    if (it->second.contains(L)) {
      ++in_h2;
      if (r[Condition::Mixed].passed != iii_cochain) ++iii;
      if (r[Condition::Constant].passed != iv_cochain) ++iv;
    } else {
      ++outside;
      if (r[Condition::Mixed].passed != iii_cochain || r[Condition::Constant].passed != iv_cochain) ++outside_mismatch;
    }
  }
  std::ostringstream d;
  d << "(ii) on " << corpus.size() << ": " << ii << " disagreements; (iii),(iv) on " << in_h2
    << " with kappa^L in H^2: " << iii << ", " << iv << " disagreements; outside H^2 (hypothesis not met, "
    << outside << " parameters): " << outside_mismatch << " differ";
  return {ii == 0 && iii == 0 && iv == 0 && in_h2 >= 50, d.str()};
}

Outcome criterion7() {
  std::mt19937_64 rng(777);
  std::vector<GroupCase> groups = small_groups();
  for (auto& g : abelian_diagonal_groups()) groups.push_back(g);

  std::size_t dd = 0, dd_bad = 0;
  while (dd < 100) {
    const GroupCase& gc = groups[dd % groups.size()];
    const std::size_t n = gc.group->dim();
    std::size_t p = rng() % (n - 1 + (n == 1));
    if (p + 2 > n && n >= 2) p = n - 2;
    Cochain a = random_cochain(gc.group, p, static_cast<int>(rng() % 3), rng, 0.4);
    if (!differential(differential(a)).is_zero()) ++dd_bad;
    ++dd;
  }

  std::size_t cob = 0, cob_bad = 0;
  while (cob < 50) {
    const GroupCase& gc = groups[(cob * 7) % groups.size()];
    const std::size_t n = gc.group->dim();
    std::size_t p = 1 + rng() % std::min<std::size_t>(n, 2);
    Cochain rho = random_cochain(gc.group, p - 1, static_cast<int>(rng() % 2), rng, 0.5);
    Cochain gamma = differential(rho);
    auto pre = is_coboundary(gamma);
    if (!pre || !(differential(*pre) == gamma)) ++cob_bad;
    ++cob;
  }

  std::size_t instances = 0, abel_bad = 0, off_bad = 0, sq_bad = 0, abel_hyp = 0, off_hyp = 0, sq_hyp = 0;
  for (const auto& gc : abelian_diagonal_groups()) {
    const Group& G = *gc.group;
    std::vector<bool> on_kernel(G.order()), off_kernel(G.order());
    for (std::size_t g = 0; g < G.order(); ++g) {
      on_kernel[g] = G.in_kernel(static_cast<int>(g));
      off_kernel[g] = !on_kernel[g];
    }
    for (int trial = 0; trial < 3; ++trial, ++instances) {
      Cochain a = random_invariant_h2(gc.group, rng), b = random_invariant_h2(gc.group, rng);
      for (const Cochain* y : {&a, &b}) {
        Cochain br = bracket(a, *y);
        if (is_coboundary(br)) {
          ++abel_hyp;
          if (!br.is_zero()) ++abel_bad;
        }
      }
      Cochain a_off = restrict_support(a, off_kernel), b_off = restrict_support(b, off_kernel);
      ++off_hyp;
      if (!bracket(a_off, b_off).is_zero() || !bracket(a_off, a_off).is_zero()) ++off_bad;

      // Linear cochains on the kernel: random ones and scaled Lie brackets.
      Cochain k = restrict_support(random_cochain(gc.group, 2, 1, rng, 0.3).part(1), on_kernel);
      Cochain lie(gc.group, 2, 1);
      if (G.dim() == 3) {
        const auto& ker = G.kernel();
        int g = ker[rng() % ker.size()];
        Scalar s = small_scalar(rng, 2);
        lie.set(g, {0, 1}, s * Polynomial::variable(3, 2));
        lie.set(g, {1, 2}, s * Polynomial::variable(3, 0));
        lie.set(g, {0, 2}, -s * Polynomial::variable(3, 1));
      }
      for (const Cochain* c : {&k, &lie}) {
        Cochain sq = bracket(*c, *c);
        if (is_coboundary(sq)) {
          ++sq_hyp;
          if (!sq.is_zero()) ++sq_bad;
        }
      }
    }
  }
  std::ostringstream d;
  d << "d*d*=0 on " << dd << " cochains (" << dd_bad << " bad); " << cob << " coboundaries recovered ("
    << cob_bad << " bad); " << instances << " abelian instances: abelian bracket vanishing " << abel_bad << "/" << abel_hyp
    << ", off-kernel vanishing " << off_bad << "/" << off_hyp << ", kernel square vanishing " << sq_bad << "/" << sq_hyp << " violations/hypothesis met";
  return {dd_bad == 0 && cob_bad == 0 && abel_bad == 0 && off_bad == 0 && sq_bad == 0 && instances >= 50 && abel_hyp > 0 &&
              sq_hyp > 0,
          d.str()};
}

std::size_t pbw_count(std::size_t order, std::size_t n, int d) {
  std::size_t total = 0;
  for (int e = 0; e <= d; ++e) {
    std::size_t c = 1;  // C(n + e - 1, e)
    for (int i = 1; i <= e; ++i) c = c * (n + e - i) / i;
    total += c;
  }
  return order * total;
}

Outcome criterion8() {
  std::size_t checks = 0, mismatches = 0;
  for (const char* name : {"klein", "s3", "sl2", "trivial2"}) {
    auto spec = load_bundled(name);
    for (int d = 0; d <= 4; ++d, ++checks) {
      std::size_t expected = pbw_count(spec.group->order(), spec.dimension, d);
      try {
        if (graded_dimension(*spec.kappa, d) != expected) ++mismatches;
      } catch (const std::logic_error&) {
        ++mismatches;
      }
    }
  }
  bool bad_rejected = false;
  try {
    graded_dimension(*load_bundled("klein_bad").kappa, 2);
  } catch (const std::logic_error&) {
    bad_rejected = true;
  }
  std::ostringstream d;
  d << checks << " counts on klein, s3, sl2, trivial2 for d <= 4: " << mismatches
    << " mismatches; klein_bad (not PBW) " << (bad_rejected ? "rejected as non-confluent" : "NOT rejected");
  return {mismatches == 0 && bad_rejected, d.str()};
}

Outcome criterion9() {
  auto spec = load_bundled("klein_bad");
  ConditionReport r = check_conditions(*spec.kappa);
  const Witness* w = r.first_witness();
  if (r.passed() || !w) return {false, "klein_bad: no failure reported"};
  Rewriter rw(*spec.kappa, true);
  PbwElement res = witness_residue(rw, *w);
  std::ostringstream d;
  d << "klein_bad fails " << condition_label(w->condition) << " at " << spec.group->word(w->g)
    << ", residue " << w->residue.to_string(spec.basis_names) << ", rewriter re-evaluation "
    << (res.is_zero() ? "0" : res.to_string(*spec.group, spec.basis_names));
  return {!res.is_zero(), d.str()};
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  bool all = true;
  auto report = [&](int n, const Outcome& o) {
    std::printf("criterion %d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };
  report(1, criterion1());
  report(2, criterion2());
  report(3, criterion3());
  std::vector<CorpusEntry> corpus = oracle_corpus();
  report(4, criterion4(corpus));
  report(5, criterion5());
  report(6, criterion6(corpus));
  report(7, criterion7());
  report(8, criterion8());
  report(9, criterion9());
  std::printf("total %s, %s\n", fmt_time(seconds_since(t0)).c_str(), all ? "all criteria pass" : "FAILURES");
  return all ? 0 : 1;
}
