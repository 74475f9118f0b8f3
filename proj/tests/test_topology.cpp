#include "bvb/models.hpp"
#include "bvb/topmech.hpp"
#include "bvb/topology.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bvbtest;

TEST_CASE("CW surface model: cohomology, duality, rank of delta") {
  for (int g = 0; g <= 4; ++g)
    for (int b = 1; b <= 4; ++b) {
      CAPTURE(g);
      CAPTURE(b);
      SurfaceComplex c = surface_complex({g, b});
      REQUIRE(c.absolute.square_zero());
      REQUIRE(c.relative.square_zero());
      REQUIRE(is_chain_map(c.relative, c.absolute, GradedMap{c.relative.space, c.absolute.space, 0, c.inclusion}));
      LefschetzPackage lp = lefschetz_data({g, b});
      CHECK(lp.cohomology.matches_closed_form);
      // H^k(M, dM) and H^{2-k}(M) have equal dimension
      for (int k = 0; k <= 2; ++k) {
        auto rel = lp.cohomology.relative, abs = lp.cohomology.absolute;
        CHECK(rel[k] == abs[2 - k]);
      }
      int euler = 0;
      for (auto [k, d] : lp.cohomology.absolute) euler += (k % 2 == 0 ? d : -d);
      CHECK(euler == 2 - 2 * g - b);
      CHECK(lp.cellular_rank_delta == 2 * g);
      CHECK(lp.block_diagonal);
      CHECK(lp.nondegenerate);
      CHECK(lp.rank_consistent);
    }
  CHECK_THROWS(surface_complex({0, 0}));
  CHECK_THROWS(surface_complex({-1, 1}));
}

TEST_CASE("PSM field cohomology matches the closed form") {
  for (int g = 0; g <= 3; ++g)
    for (int b = 1; b <= 3; ++b)
      for (int n = 1; n <= 4; ++n)
        for (const Mat& P : {poisson_zero(n), poisson_symplectic(n), poisson_rank2(n)}) {
          if (P.rows() != n) continue;
          PsmFieldCohomology f = psm_field_cohomology({g, b}, P);
          CHECK(f.agrees);
          CHECK(f.euler == 0);
        }
}

TEST_CASE("PSM global observables: worked examples") {
  PsmGlobalResult r = psm_global_observables({1, 1}, poisson_zero(2));
  CHECK(psm_field_cohomology({1, 1}, poisson_zero(2)).dims.at(0) == 6);
  CHECK(r.agrees);
  CHECK(r.bv.degree == -6);

  r = psm_global_observables({0, 1}, poisson_symplectic(2));
  CHECK(r.agrees);
  CHECK(r.bv.degree == -2);

  r = psm_global_observables({2, 3}, poisson_rank2(3), 0);
  CHECK(r.agrees);
  CHECK(r.bv.degree == -13);
  CHECK_FALSE(r.bruteforce_run);

  // g = 0, b = 1, one symplectic pair: W has 2 odd + 2 even, the top class is reachable
  r = psm_global_observables({0, 1}, poisson_symplectic(2), 1e6);
  CHECK(r.bruteforce_complete);
  CHECK(r.bruteforce == std::map<int, int>{{-2, 1}});
}

TEST_CASE("PSM global observables: line in degree minus dim H^0, whole-space elimination on small cases") {
  int bf = 0;
  for (int g = 0; g <= 2; ++g)
    for (int b = 1; b <= 3; ++b)
      for (int n = 1; n <= 3; ++n)
        for (const Mat& P : {poisson_zero(n), poisson_symplectic(n), poisson_rank2(n)}) {
          if (P.rows() != n) continue;
          PsmGlobalResult r = psm_global_observables({g, b}, P);
          CHECK(r.agrees);
          CHECK(r.bv.degree == -r.W.dims()[-1]);
          CHECK(r.W.dims()[-1] == psm_field_cohomology({g, b}, P).dims[0]);
          REQUIRE(r.bruteforce_run);
          CHECK(r.bruteforce_agrees);
          if (r.bruteforce_complete) {
            ++bf;
            CHECK(r.bruteforce == std::map<int, int>{{r.expected_degree, 1}});
          }
        }
  CHECK(bf >= 4);
}

TEST_CASE("surface Hodge data is Lagrangian") {
  for (int g = 0; g <= 3; ++g) {
    SurfaceHodge h = surface_hodge(g);
    CHECK(h.check.pass());
    CHECK(h.bd.B.space.dims() == prune({{-1, 1}, {0, 2 * g}, {1, 1}}));
    CHECK(h.bd.L().size() == static_cast<size_t>(g + 1));
  }
}

TEST_CASE("pushforward from CP^n x Sigma") {
  SpectralSurface s = spectral_surface(1);
  for (int n = 1; n <= 2; ++n) {
    CpPushforward c = cp_pushforward(n, s);
    CHECK(c.agrees_derived);
    CHECK(c.zero_mode_line);
    int total = 0;
    for (auto [k, d] : c.dims) total += d;
    CHECK(total == 1 + 1 + 4 * n);  // H^{0,*} of the torus plus n copies of H_dR
  }
  CHECK_FALSE(cp_pushforward(2, s).agrees_stated);
}

TEST_CASE("pushforward cocycle: only the middle block survives, at level vol * kappa") {
  SpectralSurface s = spectral_surface(2);
  for (int n = 1; n <= 2; ++n)
    for (Q vol : {Q(1), Q(2), Q(-3, 2)}) {
      PushforwardCocycle p = pushforward_cocycle(n, s, Q(1), vol);
      CHECK(p.equal_top);
      CHECK(p.other_blocks_zero);
      PushforwardCocycle p2 = pushforward_cocycle(n, s, Q(1), 2 * vol);
      CHECK(equal(p2.top_block, Mat(2 * p.top_block)));
    }
  PushforwardCocycle z = pushforward_cocycle(1, s, Q(0), Q(5));
  CHECK(is_zero(z.mu_X));
}

TEST_CASE("surface Hodge data through the interval verification gives W(V) and F(L)") {
  for (int g = 0; g <= 2; ++g) {
    CAPTURE(g);
    TopmechReport r = topmech_check(surface_hodge(g).bd, 3, 3, 1);
    CHECK(r.open_graded == r.weyl_graded);
    CHECK(r.half_graded == r.fock_graded);
    CHECK(r.commutator);
    CHECK(r.projection);
    CHECK(r.fock_action);
    CHECK(r.fock_module);
    CHECK(r.pass());
    // odd classes 1 and top: both degree +-1 pieces appear
    CHECK(r.weyl_graded.at(1).count(-1));
    CHECK(r.weyl_graded.at(1).count(1));
    CHECK_FALSE(r.fock_graded.at(1).count(1));
  }
  BoundaryData bad = surface_hodge(1).bd;
  bad.inL.assign(bad.inL.size(), false);
  CHECK_THROWS(topmech_check(bad, 3, 3, 1));
}
