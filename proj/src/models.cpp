#include "bvb/models.hpp"

#include <stdexcept>

namespace bvb {

BoundaryData topmech_boundary(int m) {
  if (m < 0) throw std::invalid_argument("topmech_boundary: negative dimension");
  BoundaryData bd;
  std::vector<std::string> lab;
  for (int i = 0; i < m; ++i) lab.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) lab.push_back("y" + std::to_string(i + 1));
  bd.B = CochainComplex(GradedVectorSpace(std::vector<int>(2 * m, 0), lab), zeros(2 * m, 2 * m));
  bd.omega = zeros(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    bd.omega(i, m + i) = 1;
    bd.omega(m + i, i) = -1;
  }
  bd.inL.assign(2 * m, false);
  for (int i = 0; i < m; ++i) bd.inL[m + i] = true;
  return bd;
}

ShiftedPairing circle_model() {
  ShiftedPairing p;
  p.space = GradedVectorSpace({0, 1}, {"v", "e"});
  p.degree = -1;
  p.eps = 1;
  p.B = zeros(2, 2);
  p.B(0, 1) = 1;
  p.B(1, 0) = 1;
  return p;
}

BoundaryData psm_boundary(const Mat& Pi) {
  const int n = static_cast<int>(Pi.rows());
  if (Pi.cols() != n || !equal(Mat(Pi.transpose()), Mat(-Pi))) throw std::invalid_argument("psm_boundary: Pi must be antisymmetric");
  // X = V (degree 0) + V^[1] (degree -1); canonical pairing c(xi_i, x_i) = 1, c(x_i, xi_i) = -1.
  std::vector<int> xdeg;
  std::vector<std::string> xlab;
  for (int i = 0; i < n; ++i) {
    xdeg.push_back(0);
    xlab.push_back("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    xdeg.push_back(-1);
    xlab.push_back("xi" + std::to_string(i + 1));
  }
  Mat qx = zeros(2 * n, 2 * n);
  qx.block(0, n, n, n) = Pi;
  CochainComplex X(GradedVectorSpace(xdeg, xlab), qx);
  Mat cx = zeros(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    cx(n + i, i) = 1;
    cx(i, n + i) = -1;
  }
  ShiftedPairing circ = circle_model();
  CochainComplex C(circ.space, zeros(2, 2));
  BoundaryData bd;
  bd.B = tensor(C, X);
  const int nx = 2 * n;
  bd.omega = zeros(2 * nx, 2 * nx);
  for (int c1 = 0; c1 < 2; ++c1)
    for (int c2 = 0; c2 < 2; ++c2) {
      if (sgn(circ.B(c1, c2)) == 0) continue;
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < nx; ++b)
          if (sgn(cx(a, b)) != 0)
            bd.omega(c1 * nx + a, c2 * nx + b) = sign_pow(static_cast<long>(xdeg[a]) * circ.space.deg[c2]) * circ.B(c1, c2) * cx(a, b);
    }
  bd.inL.assign(2 * nx, false);
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < n; ++i) bd.inL[c * nx + i] = true;
  return bd;
}

Mat poisson_zero(int n) { return zeros(n, n); }

Mat poisson_symplectic(int n) {
  Mat p = zeros(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    p(i, i + 1) = 1;
    p(i + 1, i) = -1;
  }
  return p;
}

Mat poisson_rank2(int n) {
  Mat p = zeros(n, n);
  if (n >= 2) {
    p(0, 1) = 1;
    p(1, 0) = -1;
  }
  return p;
}

SpectralSurface spectral_surface(int pairs) {
  if (pairs < 0) throw std::invalid_argument("spectral_surface: negative mode count");
  SpectralSurface s;
  s.lambda.push_back(0);
  s.mu.push_back(0);
  s.weight.push_back(1);
  for (int k = 1; k <= pairs; ++k)
    for (int sgn_k : {1, -1}) {
      s.lambda.push_back(Q(sgn_k * k));
      s.mu.push_back(Q(sgn_k * (2 * k + 1)));
      s.weight.push_back(1);
    }
  return s;
}

BoundaryData spectral_dolbeault(const SpectralSurface& s, const Q& kappa) {
  const int nm = s.modes();
  std::vector<int> deg;
  std::vector<std::string> lab;
  for (int m = 0; m < nm; ++m)
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        deg.push_back(p + q - 1);
        lab.push_back("a" + std::to_string(m) + "_" + std::to_string(p) + std::to_string(q));
      }
  const int n = 4 * nm;
  Mat d = zeros(n, n), raw = zeros(n, n);
  for (int m = 0; m < nm; ++m) {
    d(spectral_index(m, 0, 1), spectral_index(m, 0, 0)) += s.lambda[m];
    d(spectral_index(m, 1, 1), spectral_index(m, 1, 0)) += -s.lambda[m];
    d(spectral_index(m, 1, 0), spectral_index(m, 0, 0)) += s.mu[m];
    d(spectral_index(m, 1, 1), spectral_index(m, 0, 1)) += s.mu[m];
    int mb = s.partner(m);
    Q w = kappa * s.weight[m];
    raw(spectral_index(m, 0, 0), spectral_index(mb, 1, 1)) = w;
    raw(spectral_index(m, 1, 1), spectral_index(mb, 0, 0)) = w;
    raw(spectral_index(m, 0, 1), spectral_index(mb, 1, 0)) = -w;
    raw(spectral_index(m, 1, 0), spectral_index(mb, 0, 1)) = w;
  }
  BoundaryData bd;
  bd.B = CochainComplex(GradedVectorSpace(deg, lab), d);
  bd.omega = raw;
  for (int a = 0; a < n; ++a)
    if (parity(deg[a])) bd.omega.row(a) = -bd.omega.row(a);
  bd.inL.assign(n, false);
  for (int m = 0; m < nm; ++m) {
    bd.inL[spectral_index(m, 1, 0)] = true;
    bd.inL[spectral_index(m, 1, 1)] = true;
  }
  return bd;
}

FieldComplex slab_model(const SpectralSurface& s, int N, const Q& kappa) {
  BulkBoundaryModel m;
  m.bd = spectral_dolbeault(s, kappa);
  m.N = N;
  std::vector<bool> top(m.bd.size(), false);
  for (int k = 0; k < s.modes(); ++k) {
    top[spectral_index(k, 0, 1)] = true;
    top[spectral_index(k, 1, 1)] = true;
  }
  m.conditions[0] = m.bd.inL;
  m.conditions[N] = top;
  return conditioned_fields(m, 0, N, "cc");
}

ScalarModel scalar_complex(const SpectralSurface& s, const Q& kappa) {
  const int nm = s.modes();
  std::vector<int> deg;
  std::vector<std::string> lab;
  for (int m = 0; m < nm; ++m) {
    deg.push_back(0);
    lab.push_back("f" + std::to_string(m));
  }
  for (int m = 0; m < nm; ++m) {
    deg.push_back(1);
    lab.push_back("w" + std::to_string(m));
  }
  Mat d = zeros(2 * nm, 2 * nm), B = zeros(2 * nm, 2 * nm);
  for (int m = 0; m < nm; ++m) {
    d(nm + m, m) = s.lambda[m] * s.mu[m];
    int mb = s.partner(m);
    B(m, nm + mb) = kappa * s.weight[m];
    B(nm + mb, m) = -kappa * s.weight[m];
  }
  return ScalarModel{CochainComplex(GradedVectorSpace(deg, lab), d), B};
}

Mat slab_inclusion(const SpectralSurface& s, const FieldComplex& slab, const std::vector<Q>& phi) {
  const int nm = s.modes();
  const CellularInterval& cells = slab.cells;
  std::vector<Q> Phi = primitive(phi, cells.N);
  Mat I = zeros(slab.size(), 2 * nm);
  auto put = [&](int pos, int coord, int col, const Q& x) {
    if (sgn(x) == 0) return;
    int r = slab.index(pos, coord);
    if (r < 0) throw std::logic_error("slab_inclusion: image leaves the conditioned fields");
    I(r, col) += x;
  };
  for (int m = 0; m < nm; ++m) {
    for (int e : cells.edges) put(cells.edge_pos(e), spectral_index(m, 0, 0), m, phi[e]);
    for (int v : cells.vertices) {
      put(cells.vertex_pos(v), spectral_index(m, 0, 1), m, Phi[v] * s.lambda[m]);
      put(cells.vertex_pos(v), spectral_index(m, 1, 0), m, (Phi[v] - 1) * s.mu[m]);
      put(cells.vertex_pos(v), spectral_index(m, 1, 1), nm + m, Q(1));
    }
  }
  return I;
}

RiemannianModel riemannian_condition_model(const Vec& a, const Mat& plus, const Mat& minus) {
  const int mid = static_cast<int>(a.size());
  if (mid % 2 != 0) throw std::invalid_argument("riemannian_condition_model: middle degree must be even-dimensional");
  const int n = mid + 2;
  std::vector<int> deg(n, 0);
  std::vector<std::string> lab{"bottom"};
  deg[0] = -1;
  deg[n - 1] = 1;
  for (int i = 0; i < mid; ++i) lab.push_back("m" + std::to_string(i + 1));
  lab.push_back("top");
  Mat omega_mid = zeros(mid, mid);
  for (int i = 0; i + 1 < mid; i += 2) {
    omega_mid(i, i + 1) = 1;
    omega_mid(i + 1, i) = -1;
  }
  Mat omega = zeros(n, n);
  omega.block(1, 1, mid, mid) = omega_mid;
  omega(0, n - 1) = -1;
  omega(n - 1, 0) = -1;
  Mat d = zeros(n, n);
  for (int i = 0; i < mid; ++i) d(1 + i, 0) = a(i);
  // d1(v) = -omega(a, v)
  Mat d1 = -(Mat(a.transpose()) * omega_mid);
  for (int i = 0; i < mid; ++i) d(n - 1, 1 + i) = d1(0, i);
  CochainComplex B(GradedVectorSpace(deg, lab), d);
  auto embed = [&](const Mat& m) {
    Mat out = zeros(n, m.cols());
    out.block(1, 0, mid, m.cols()) = m;
    return out;
  };
  Mat top = zeros(n, 1), bottom = zeros(n, 1);
  top(n - 1, 0) = 1;
  bottom(0, 0) = 1;
  RiemannianModel out;
  out.bd = adapt_boundary(B, omega, hcat(embed(plus), top), hcat(bottom, embed(minus)));
  out.check = lagrangian_check(out.bd);
  Mat split = hcat(plus, minus);
  Mat coords = inverse(split) * Mat(a);
  out.d_minus = coords.bottomRows(minus.cols());
  return out;
}

}  // namespace bvb
