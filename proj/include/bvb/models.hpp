#pragma once

#include "bvb/bulk.hpp"

namespace bvb {

/// Symplectic vector space V in degree 0 with Darboux basis x_1..x_m, y_1..y_m,
/// omega(x_i, y_i) = 1, Q = 0. L = span(y), Lperp = span(x).
BoundaryData topmech_boundary(int m);

/// Minimal Poincare-dual circle: v in degree 0, e in degree 1, d = 0, W(v,e) = W(e,v) = 1.
ShiftedPairing circle_model();

/// C(S^1) (x) (V + V^[1]) with Q = 1 (x) Pi (Pi : V^[1] -> V) and the tensor of the
/// circle pairing with the canonical pairing. L = C (x) V, Lperp = C (x) V^[1].
/// Coordinates are (cell, j) cell-major; j < dimV is x_j, j >= dimV is xi_{j - dimV}.
BoundaryData psm_boundary(const Mat& Pi);

// Standard Poisson tensors: zero, symplectic blocks (rank 2 floor(n/2)), or rank 2 on the first pair.
Mat poisson_zero(int n);
Mat poisson_symplectic(int n);
Mat poisson_rank2(int n);

/// Truncated spectral model of a torus: mode 0 is the zero mode, modes 2k-1 and 2k
/// carry the eigenvalue pair (lambda_k, mu_k) and its negative.
struct SpectralSurface {
  std::vector<Q> lambda, mu, weight;  // per mode
  int modes() const { return static_cast<int>(lambda.size()); }
  int partner(int m) const { return m == 0 ? 0 : (m % 2 == 1 ? m + 1 : m - 1); }
};

// pairs nonzero mode pairs with distinct nonzero eigenvalues lambda_k = k, mu_k = 2k + 1, weights 1.
SpectralSurface spectral_surface(int pairs);

// Type t = 2p + q of Omega^{p,q}; degree p + q - 1.
inline int spectral_index(int mode, int p, int q) { return 4 * mode + 2 * p + q; }

/// Boundary data of the chiral boundary condition: B = spectral de Rham model
/// with d = dbar + del, omega = kappa * (shifted wedge pairing), L = types (1,*).
BoundaryData spectral_dolbeault(const SpectralSurface& s, const Q& kappa);

/// Conditioned slab fields on [0, N]: (1,*) at v_0 and (*,1) at v_N.
FieldComplex slab_model(const SpectralSurface& s, int N, const Q& kappa);
/// f_k in degree 0, w_k in degree 1, d f_k = lambda_k mu_k w_k, with pairing <f_k, w_{-k}> = kappa weight_k.
struct ScalarModel {
  CochainComplex C;
  Mat pairing;
};
ScalarModel scalar_complex(const SpectralSurface& s, const Q& kappa);
/// Chain map scalar -> slab: I(f) = phi f00 + Phi dbar f00 + (Phi - 1) del f00, I(w) = 1 w11,
/// with f00, w11 the (0,0) and (1,1) lines of the same mode.
Mat slab_inclusion(const SpectralSurface& s, const FieldComplex& slab, const std::vector<Q>& phi);

/// Finite model of Omega(N) around the middle degree: Omega^{2n}, Omega^{2n+1} (dim 2r,
/// Darboux form), Omega^{2n+2}, in degrees -1, 0, 1, with d0 = a and d1 fixed by invariance.
/// `plus` spans the declared + part of the middle degree; L = plus + top degree.
struct RiemannianModel {
  BoundaryData bd;
  LagrangianCheck check;
  Mat d_minus;  // d0 followed by projection onto the - part
};
RiemannianModel riemannian_condition_model(const Vec& a, const Mat& plus, const Mat& minus);

}  // namespace bvb
