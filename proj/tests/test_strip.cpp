#include "bvb/algebras.hpp"
#include "bvb/models.hpp"
#include "bvb/strip.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bvbtest;

TEST_CASE("Koszul strip is acyclic, with and without the Pi perturbation") {
  for (int n = 1; n <= 3; ++n)
    for (int N = 2; N <= 4; ++N) {
      FieldComplex strip = conditioned_fields(koszul_strip_model(n, N), 0, N, "cc");
      CHECK(cohomology_dims(strip.E).empty());
      CHECK(is_zero(pairing_invariance_defect(strip.E, strip.pairing)));
      for (const Mat& P : {poisson_zero(n), poisson_symplectic(n), poisson_rank2(n)}) {
        Mat delta = strip_pi_perturbation(strip, P);
        Mat d = strip.E.d + delta;
        REQUIRE(is_zero(Mat(d * d)));
        CHECK(cohomology_dims(CochainComplex(strip.E.space, d)).empty());
        DeformationRetraction h = hpl(standard_retraction(strip.E), delta);
        CHECK(check_retraction(h).identities());
        CHECK(h.small.size() == 0);
      }
    }
}

TEST_CASE("the naive Pi term is not compatible with the strip conditions") {
  // Without the reflection, Q_Pi maps the V^ part kept at v_N into the V part, which is dropped there.
  BulkBoundaryModel m = koszul_strip_model(2, 3);
  m.bd = psm_boundary(poisson_symplectic(2));
  CHECK_THROWS(conditioned_fields(m, 0, 3, "cc"));
}

TEST_CASE("Koszul pairing: unit, augmentations, quantum strip") {
  for (int n = 1; n <= 2; ++n) {
    KoszulPairing kp(n, 2, 3, 2);
    CHECK(kp.q({}, {}) == HPoly(1));
    CHECK(sym_cohomology(kp.strip_quantum()) == std::map<int, int>{{0, 3}});
    for (int d = 1; d <= 3; ++d) {
      for (auto& f : multisets(n, d)) CHECK(kp.q(f, {}).zero());
      for (auto& l : subsets(n, d)) CHECK(kp.q({}, l).zero());
    }
    // linear pairing has degree 1 and therefore vanishes in Q[hbar]
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(kp.q({i}, {j}).zero());
  }
  KoszulPairing zero(0, 2, 3, 2);
  CHECK(zero.q({}, {}) == HPoly(1));
}

TEST_CASE("Koszul strip report") {
  auto r = koszul_strip_check(2, 2, poisson_symplectic(2), 3, 2, true);
  CHECK(r.pass());
  CHECK(r.monomials_checked == 14);
  auto t = koszul_strip_check(0, 2, zeros(0, 0), 3, 2, true);
  CHECK(t.pass());
  CHECK(t.classical_acyclic);
}
