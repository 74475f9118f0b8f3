// Acceptance run: ten criteria, each with a wall-clock budget. One PASS/FAIL line per criterion;
// a criterion fails if any check fails or the budget is exceeded.

#include "bvb/algebras.hpp"
#include "bvb/models.hpp"
#include "bvb/strip.hpp"
#include "bvb/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace bvb;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget;  // seconds
  std::function<Report()> run;
};

Report topmech_grid() {
  Report r;
  for (int dimV : {2, 4})
    for (int cells : {3, 4, 5}) {
      SuiteConfig c;
      c.dimV = dimV;
      c.cells = cells;
      c.symCut = 3;
      c.hbarCut = 2;
      r.merge(run_topmech(c), "dimV" + std::to_string(dimV) + "_N" + std::to_string(cells) + "_");
    }
  return r;
}

Report strip_grid() {
  Report r;
  int classical = 0, classical_fail = 0;
  for (int n = 1; n <= 4; ++n)
    for (int N = 2; N <= 6; ++N)
      for (const Mat& P : {poisson_zero(n), poisson_symplectic(n), poisson_rank2(n)}) {
        FieldComplex strip = conditioned_fields(koszul_strip_model(n, N), 0, N, "cc");
        Mat delta = strip_pi_perturbation(strip, P);
        Mat dp = strip.E.d + delta;
        ++classical;
        bool ok = cohomology_dims(strip.E).empty() && is_zero(mul(dp, dp)) &&
                  cohomology_dims(CochainComplex(strip.E.space, dp)).empty();
        if (ok) {
          DeformationRetraction h = hpl(standard_retraction(strip.E), delta);
          ok = check_retraction(h).identities() && h.small.size() == 0;
        }
        if (!ok) ++classical_fail;
      }
  r.expect("strip_and_pi_perturbed_strip_acyclic_failures", classical_fail, 0, source::closed_form);
  r.note("strips_checked", classical);

  SuiteConfig zero;
  zero.dimV = 0;
  r.merge(run_koszul_strip(zero), "dimV0_");
  // quantum observables and the pairing q: every dim V on short strips, longer strips for dim V <= 2
  for (int n = 1; n <= 4; ++n) {
    const int maxN = n == 1 ? 6 : n == 2 ? 4 : 3;
    for (int N = 2; N <= maxN; ++N) {
      KoszulStripReport k = koszul_strip_check(n, N, poisson_zero(n), 3, 2, true);
      std::string tag = "dimV" + std::to_string(n) + "_N" + std::to_string(N) + "_";
      r.expect(tag + "quantum_observables", dims_json(k.quantum_dims), dims_json({{0, 3}}), source::closed_form);
      r.require(tag + "pairing_restricts_to_augmentations", k.restricts_sym && k.restricts_ext, source::closed_form);
      r.expect(tag + "pairing_unit", hpoly_json(k.q_unit), hpoly_json(HPoly(1)), source::closed_form);
    }
  }
  return r;
}

Report psm_grid() {
  Report r;
  int complete = 0;
  for (int g = 0; g <= 2; ++g)
    for (int b = 1; b <= 3; ++b)
      for (int n = 1; n <= 3; ++n)
        for (const std::string pi : {"zero", "symplectic", "rank2"}) {
          Mat P = pi == "zero" ? poisson_zero(n) : pi == "symplectic" ? poisson_symplectic(n) : poisson_rank2(n);
          double budget = b <= 2 ? 2e5 : 0;
          Report s = psm_suite(g, b, P, budget);
          r.merge(s, "g" + std::to_string(g) + "_b" + std::to_string(b) + "_n" + std::to_string(n) + "_" + pi + "_");
          if (b <= 2 && s.to_json()["notes"].value("truncation_reaches_top_class", false)) ++complete;
        }
  r.note("bruteforce_reaching_top_class", complete);
  return r;
}

Report slab_grid() {
  Report r;
  for (int pairs = 0; pairs <= 2; ++pairs)
    for (int N = 2; N <= 3; ++N)
      r.merge(slab_suite(pairs, N, 3, 2), "pairs" + std::to_string(pairs) + "_N" + std::to_string(N) + "_");
  return r;
}

Report brylinski_grid() {
  Report r;
  for (int n = 1; n <= 3; ++n)
    for (const std::string pi : {"zero", "symplectic", "rank2"}) {
      Mat P = pi == "zero" ? poisson_zero(n) : pi == "symplectic" ? poisson_symplectic(n) : poisson_rank2(n);
      r.merge(brylinski_suite(P, 6), "dimV" + std::to_string(n) + "_" + pi + "_");
    }
  // a rank-2 tensor in a non-Darboux basis
  Mat P = zeros(3, 3);
  P(0, 1) = 2;
  P(0, 2) = -1;
  P(1, 2) = 3;
  P(1, 0) = -2;
  P(2, 0) = 1;
  P(2, 1) = -3;
  r.merge(brylinski_suite(P, 6), "dimV3_generic_");
  return r;
}

Report pushforward_grid() {
  Report r;
  for (int n = 1; n <= 2; ++n) r.merge(higher_cs_suite(n, 1), "n" + std::to_string(n) + "_");
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "structural identities", 30, [] { return structural_suite(4, 4, 1, 3, 2); }},
      {2, "Green's form", 10, [] { return greens_suite(8, 4, 1); }},
      {3, "Weyl algebra and Fock module", 120, topmech_grid},
      {4, "Koszul strip", 30, strip_grid},
      {5, "PSM global observables", 180, psm_grid},
      {6, "slab compactification", 60, slab_grid},
      {7, "correspondence maps", 30, [] { return maps_suite(5, 1); }},
      {8, "Brylinski window", 60, brylinski_grid},
      {9, "pushforward cocycle", 5, pushforward_grid},
      {10, "cosheaf exactness", 10, [] { return cosheaf_suite(6, 1); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget;
    const bool ok = r.pass() && in_time;
    if (!ok) ++failed;
    std::printf("%s %2d %-30s %4zu/%-4zu checks  %7.2f s / %.0f s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                r.checks().size() - r.failures(), r.checks().size(), secs, c.budget, in_time ? "" : "  over budget");
    for (const auto& ch : r.checks())
      if (!ch.pass) std::printf("     failed: %s\n", ch.name.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
