#pragma once

#include "bvb/bulk.hpp"
#include "bvb/bv.hpp"
#include "bvb/models.hpp"

#include <map>

namespace bvb {

/// Compact oriented surface of genus g with b >= 1 boundary circles.
struct SurfaceData {
  int g = 0, b = 1;
};

/// CW model: vertices p, q_1..q_b; loops a_i, b_i at p; boundary loops c_k at q_k;
/// tails t_k from p to q_k; one face with boundary word prod [a_i, b_i] prod t_k c_k t_k^-1.
/// Relative cochains vanish on the boundary cells q_k, c_k.
struct SurfaceComplex {
  CochainComplex absolute;
  CochainComplex relative;
  Mat inclusion;  // relative -> absolute cochains
};
SurfaceComplex surface_complex(const SurfaceData& s);

struct SurfaceCohomology {
  std::map<int, int> absolute, relative;  // computed from the CW model
  bool matches_closed_form = false;
};
SurfaceCohomology surface_cohomology(const SurfaceData& s);

/// H^1(M, dM) with basis (f_1..f_2g, e_1..e_{b-1}) and H^1(M) with basis
/// (delta f_1..delta f_2g, c_1..c_{b-1}), so delta = diag(1_2g, 0) and the Lefschetz
/// pairing is the symplectic form on the 2g block plus the identity on the b-1 block.
struct LefschetzPackage {
  int g = 0, b = 1;
  SurfaceCohomology cohomology;
  Mat delta;  // H^1(M, dM) -> H^1(M)
  Mat Omega;  // rows H^1(M, dM), columns H^1(M)
  int cellular_rank_delta = 0;  // rank of the map induced by the CW inclusion
  bool block_diagonal = false, nondegenerate = false, rank_consistent = false;
};
LefschetzPackage lefschetz_data(const SurfaceData& s);

struct PsmFieldCohomology {
  std::map<int, int> dims;
  std::map<int, int> closed_form;  // (2g ker + (b-1) n + n, 2g coker + (b-1) n + n)
  int kernel = 0, cokernel = 0;    // of the E0 differential delta (x) Pi
  bool agrees = false;
  int euler = 0;
};
PsmFieldCohomology psm_field_cohomology(const SurfaceData& s, const Mat& Pi);

struct PsmGlobalResult {
  GradedVectorSpace W;  // H^0 in degree -1, H^1 in degree 0
  Mat BW;
  FiniteBVResult bv;
  int expected_rank = 1, expected_degree = 0;
  bool agrees = false;
  // Whole-space elimination on Sym^{<=cap}(W), no splitting. In the stable range it must
  // show the top class exactly when #odd <= cap - 2, and nothing otherwise.
  bool bruteforce_run = false;
  int bruteforce_cap = 0;
  bool bruteforce_complete = false;  // cap reaches the top class
  std::map<int, int> bruteforce, bruteforce_expected;
  bool bruteforce_agrees = false;
};
// The cap is the largest value (at most #odd + 2) whose monomial count stays within the budget.
PsmGlobalResult psm_global_observables(const SurfaceData& s, const Mat& Pi, double bruteforce_budget = 2e4);

/// V = H(Sigma_g)[1] in degrees -1, 0, 1 with the Poincare pairing; L = a-span plus the top class.
struct SurfaceHodge {
  BoundaryData bd;
  LagrangianCheck check;
};
SurfaceHodge surface_hodge(int g);

/// sum_{i + j <= n} Omega^{i,*}(Sigma) (x) h^j with h^j in bidegree (j, j), degree
/// i + q + 2j - 2n - 1, differential dbar + del (del dropped past i + j = n).
struct CpPushforward {
  int n = 1;
  std::map<int, int> dims;
  std::map<int, std::map<int, int>> by_j;
  std::map<int, int> stated;   // H(Omega^{0,*}) + sum_{j=1}^{n-1} H_dR[2n + 2j]
  std::map<int, int> derived;  // H(Omega^{0,*}) + sum_{j=0}^{n-1} H_dR[2n + 1 - 2j]
  bool agrees_stated = false, agrees_derived = false;
  bool zero_mode_line = false;  // Omega^{0,1} zero mode survives in degree 0
};
CpPushforward cp_pushforward(int n, const SpectralSurface& s);

/// Cocycle mu_X(a h^i, b h^j) = mu_Sigma(a, b) * int h^{i+j} on sum_j Omega^{0,*}(Sigma) h^j,
/// with int h^{2n} = vol. The j = n block is compared with the level vol * kappa cocycle.
struct PushforwardCocycle {
  Mat mu_X;           // full block matrix
  Mat top_block;      // j = n block
  Mat expected;       // mu of spectral_dolbeault at level vol * kappa
  bool equal_top = false, other_blocks_zero = false;
};
PushforwardCocycle pushforward_cocycle(int n, const SpectralSurface& s, const Q& kappa, const Q& vol);

}  // namespace bvb
