#include "bvb/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvb {

namespace {

void require_surface(const SurfaceData& s) {
  if (s.g < 0) throw std::invalid_argument("surface: genus must be nonnegative");
  if (s.b < 1) throw std::invalid_argument("surface: needs at least one boundary component");
}

// Lines of the spectral model with the given (p, q) filter, for the Omega^{i,*} pieces.
std::vector<int> spectral_lines(const SpectralSurface& s, int pmax) {
  std::vector<int> out;
  for (int m = 0; m < s.modes(); ++m)
    for (int p = 0; p <= pmax; ++p)
      for (int q = 0; q < 2; ++q) out.push_back(spectral_index(m, p, q));
  return out;
}

std::map<int, int> shifted(const std::map<int, int>& h, int by) {
  std::map<int, int> out;
  for (auto [k, d] : h) out[k + by] += d;
  return prune(out);
}

std::map<int, int> add(std::map<int, int> a, const std::map<int, int>& b) {
  for (auto [k, d] : b) a[k] += d;
  return prune(a);
}

// Monomials of Sym^{<=k} in `odd` odd and `even` even generators.
double monomial_count(int odd, int even, int k) {
  auto binom = [](double n, int r) {
    double x = 1;
    for (int i = 0; i < r; ++i) x = x * (n - i) / (i + 1);
    return x;
  };
  double total = 0;
  for (int s = 0; s <= k; ++s)
    for (int a = 0; a <= std::min(s, odd); ++a) total += binom(odd, a) * (even == 0 ? (s == a) : binom(even + s - a - 1, s - a));
  return total;
}

}  // namespace

SurfaceComplex surface_complex(const SurfaceData& s) {
  require_surface(s);
  const int g = s.g, b = s.b;
  // flat order: p, q_k | a_i, b_i, t_k, c_k | F
  const int nv = 1 + b, ne = 2 * g + 2 * b, n = nv + ne + 1;
  auto q = [&](int k) { return 1 + k; };
  auto t = [&](int k) { return nv + 2 * g + k; };
  auto c = [&](int k) { return nv + 2 * g + b + k; };
  const int F = n - 1;
  std::vector<int> deg(n, 1);
  std::vector<std::string> lab(n);
  lab[0] = "p";
  deg[0] = 0;
  for (int k = 0; k < b; ++k) {
    deg[q(k)] = 0;
    lab[q(k)] = "q" + std::to_string(k + 1);
    lab[t(k)] = "t" + std::to_string(k + 1);
    lab[c(k)] = "c" + std::to_string(k + 1);
  }
  for (int i = 0; i < g; ++i) {
    lab[nv + 2 * i] = "a" + std::to_string(i + 1);
    lab[nv + 2 * i + 1] = "b" + std::to_string(i + 1);
  }
  deg[F] = 2;
  lab[F] = "F";
  // coboundary is the transpose of the cellular boundary
  Mat d = zeros(n, n);
  for (int k = 0; k < b; ++k) {
    d(t(k), q(k)) = 1;
    d(t(k), 0) = -1;
    d(F, c(k)) = 1;
  }
  SurfaceComplex out;
  out.absolute = CochainComplex(GradedVectorSpace(deg, lab), d);
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    bool boundary = false;
    for (int k = 0; k < b; ++k)
      if (i == q(k) || i == c(k)) boundary = true;
    if (!boundary) keep.push_back(i);
  }
  std::vector<int> rdeg;
  std::vector<std::string> rlab;
  for (int i : keep) {
    rdeg.push_back(deg[i]);
    rlab.push_back(lab[i]);
  }
  out.relative = CochainComplex(GradedVectorSpace(rdeg, rlab), submatrix(d, keep, keep));
  out.inclusion = zeros(n, static_cast<long>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) out.inclusion(keep[j], j) = 1;
  return out;
}

SurfaceCohomology surface_cohomology(const SurfaceData& s) {
  SurfaceComplex c = surface_complex(s);
  SurfaceCohomology out;
  out.absolute = cohomology_dims(c.absolute);
  out.relative = cohomology_dims(c.relative);
  int h1 = 2 * s.g + s.b - 1;
  out.matches_closed_form = out.absolute == prune({{0, 1}, {1, h1}}) && out.relative == prune({{1, h1}, {2, 1}});
  return out;
}

LefschetzPackage lefschetz_data(const SurfaceData& s) {
  require_surface(s);
  LefschetzPackage out;
  out.g = s.g;
  out.b = s.b;
  out.cohomology = surface_cohomology(s);
  const int g2 = 2 * s.g, e = s.b - 1, n = g2 + e;
  out.delta = zeros(n, n);
  out.Omega = zeros(n, n);
  for (int i = 0; i < g2; ++i) out.delta(i, i) = 1;
  for (int i = 0; i < s.g; ++i) {
    out.Omega(2 * i, 2 * i + 1) = 1;
    out.Omega(2 * i + 1, 2 * i) = -1;
  }
  for (int k = 0; k < e; ++k) out.Omega(g2 + k, g2 + k) = 1;

  SurfaceComplex c = surface_complex(s);
  Cohomology rel = cohomology(c.relative);
  Mat reps = rel.reps.count(1) ? Mat(c.inclusion * rel.reps.at(1)) : zeros(c.absolute.size(), 0);
  std::vector<int> zero_cells = c.absolute.space.indices(0);
  Mat B = zeros(c.absolute.size(), static_cast<long>(zero_cells.size()));
  for (size_t j = 0; j < zero_cells.size(); ++j) B.col(j) = c.absolute.d.col(zero_cells[j]);
  out.cellular_rank_delta = static_cast<int>(rank(hcat(reps, B)) - rank(B));

  bool zero_off = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < g2) != (j < g2) && (out.delta(i, j) != 0 || out.Omega(i, j) != 0)) zero_off = false;
  out.block_diagonal = zero_off && (e == 0 || is_zero(out.delta.bottomRightCorner(e, e)));
  out.nondegenerate = rank(out.Omega) == n;
  out.rank_consistent = rank(out.delta) == g2 && out.cellular_rank_delta == g2;
  return out;
}

PsmFieldCohomology psm_field_cohomology(const SurfaceData& s, const Mat& Pi) {
  LefschetzPackage lp = lefschetz_data(s);
  const int n = static_cast<int>(Pi.rows());
  PsmFieldCohomology out;
  Mat E0 = kron(lp.delta, Pi);
  int r = static_cast<int>(rank(E0));
  out.kernel = static_cast<int>(E0.cols()) - r;
  out.cokernel = static_cast<int>(E0.rows()) - r;
  out.dims = prune({{0, n + out.kernel}, {1, out.cokernel + n}});
  int ker = n - static_cast<int>(rank(Pi));
  int coker = ker;
  out.closed_form = prune({{0, 2 * s.g * ker + (s.b - 1) * n + n}, {1, 2 * s.g * coker + (s.b - 1) * n + n}});
  out.agrees = out.dims == out.closed_form;
  for (auto [k, d] : out.dims) out.euler += sign_pow(k) * d;
  return out;
}

PsmGlobalResult psm_global_observables(const SurfaceData& s, const Mat& Pi, double bruteforce_budget) {
  LefschetzPackage lp = lefschetz_data(s);
  const int n = static_cast<int>(Pi.rows());
  Mat E0 = kron(lp.delta, Pi);
  Mat ker = nullspace(E0);
  Mat im = column_basis(E0);
  Mat comp = extend_basis(im, identity(E0.rows()));
  Mat pair = kron(lp.Omega, identity(n));  // (rel, dual) x (abs, vector)

  const int nk = static_cast<int>(ker.cols()), nc = static_cast<int>(comp.cols());
  const int odd = n + nk, even = n + nc;
  std::vector<int> deg(odd, -1);
  deg.resize(odd + even, 0);
  std::vector<std::string> lab;
  for (int k = 0; k < n; ++k) lab.push_back("1.x" + std::to_string(k + 1));
  for (int k = 0; k < nk; ++k) lab.push_back("rel" + std::to_string(k + 1));
  for (int k = 0; k < n; ++k) lab.push_back("top.xi" + std::to_string(k + 1));
  for (int k = 0; k < nc; ++k) lab.push_back("abs" + std::to_string(k + 1));
  PsmGlobalResult out;
  out.W = GradedVectorSpace(deg, lab);
  out.BW = zeros(odd + even, odd + even);
  for (int k = 0; k < n; ++k) out.BW(k, odd + k) = out.BW(odd + k, k) = 1;
  if (nk > 0 && nc > 0) {
    Mat block = Mat(ker.transpose()) * pair * comp;
    for (int a = 0; a < nk; ++a)
      for (int b = 0; b < nc; ++b) out.BW(n + a, odd + n + b) = out.BW(odd + n + b, n + a) = block(a, b);
  }
  if (rank(out.BW) != odd + even) throw std::logic_error("psm_global_observables: induced pairing is degenerate");
  out.bv = finite_bv_cohomology(out.W, out.BW);
  int kerPi = n - static_cast<int>(rank(Pi));
  out.expected_degree = -2 * s.g * kerPi - s.b * n;
  out.agrees = out.bv.concentrated && out.bv.rank == out.expected_rank && out.bv.degree == out.expected_degree;
  int cap = 0;
  for (int k = 2; k <= odd + 2 && monomial_count(odd, even, k) <= bruteforce_budget; ++k) cap = k;
  if (cap >= 2) {
    out.bruteforce_run = true;
    out.bruteforce_cap = cap;
    out.bruteforce_complete = odd <= cap - 2;
    if (out.bruteforce_complete) out.bruteforce_expected = {{-odd, 1}};
    out.bruteforce = finite_bv_bruteforce(out.W, out.BW, cap);
    out.bruteforce_agrees = out.bruteforce == out.bruteforce_expected;
  }
  return out;
}

SurfaceHodge surface_hodge(int g) {
  if (g < 0) throw std::invalid_argument("surface_hodge: genus must be nonnegative");
  const int n = 2 * g + 2;
  std::vector<int> deg(n, 0);
  std::vector<std::string> lab(n);
  deg[0] = -1;
  lab[0] = "1";
  deg[n - 1] = 1;
  lab[n - 1] = "top";
  SurfaceHodge out;
  out.bd.omega = zeros(n, n);
  out.bd.inL.assign(n, false);
  for (int i = 0; i < g; ++i) {
    lab[1 + 2 * i] = "a" + std::to_string(i + 1);
    lab[2 + 2 * i] = "b" + std::to_string(i + 1);
    out.bd.omega(1 + 2 * i, 2 + 2 * i) = 1;
    out.bd.omega(2 + 2 * i, 1 + 2 * i) = -1;
    out.bd.inL[1 + 2 * i] = true;
  }
  out.bd.omega(0, n - 1) = 1;
  out.bd.omega(n - 1, 0) = 1;
  out.bd.inL[n - 1] = true;
  out.bd.B = CochainComplex(GradedVectorSpace(deg, lab), zeros(n, n));
  out.check = lagrangian_check(out.bd);
  return out;
}

CpPushforward cp_pushforward(int n, const SpectralSurface& s) {
  if (n < 1) throw std::invalid_argument("cp_pushforward: n must be positive");
  const Mat d = spectral_dolbeault(s, Q(1)).B.d;
  auto complex_on = [&](const std::vector<int>& lines, int shift, bool with_del) {
    std::vector<int> deg;
    for (int i : lines) deg.push_back((i % 4) / 2 + i % 2 + shift);
    Mat sub = submatrix(d, lines, lines);
    if (!with_del)
      for (size_t r = 0; r < lines.size(); ++r)
        for (size_t c = 0; c < lines.size(); ++c)
          if ((lines[r] % 4) / 2 != (lines[c] % 4) / 2) sub(r, c) = 0;
    return CochainComplex(GradedVectorSpace(deg), sub);
  };
  CpPushforward out;
  out.n = n;
  for (int j = 0; j <= n; ++j) {
    int imax = std::min(1, n - j);
    auto h = cohomology_dims(complex_on(spectral_lines(s, imax), 2 * j - 2 * n - 1, true));
    out.by_j[j] = h;
    out.dims = add(out.dims, h);
  }
  auto dolbeault0 = cohomology_dims(complex_on(spectral_lines(s, 0), -1, false));
  auto de_rham = cohomology_dims(complex_on(spectral_lines(s, 1), 0, true));
  out.stated = dolbeault0;
  for (int j = 1; j <= n - 1; ++j) out.stated = add(out.stated, shifted(de_rham, -2 * n - 2 * j));
  out.derived = dolbeault0;
  for (int j = 0; j <= n - 1; ++j) out.derived = add(out.derived, shifted(de_rham, 2 * j - 2 * n - 1));
  out.agrees_stated = out.dims == out.stated;
  out.agrees_derived = out.dims == out.derived;
  out.zero_mode_line = out.by_j[n].count(0) && out.by_j[n].at(0) >= 1;
  return out;
}

PushforwardCocycle pushforward_cocycle(int n, const SpectralSurface& s, const Q& kappa, const Q& vol) {
  if (n < 1) throw std::invalid_argument("pushforward_cocycle: n must be positive");
  Mat mu = decompose(spectral_dolbeault(s, kappa)).mu;
  const long k = mu.rows();
  PushforwardCocycle out;
  out.mu_X = zeros(k * (n + 1), k * (n + 1));
  for (int j1 = 0; j1 <= n; ++j1)
    for (int j2 = 0; j2 <= n; ++j2) {
      Q integral = j1 + j2 == 2 * n ? vol : Q(0);
      out.mu_X.block(j1 * k, j2 * k, k, k) = integral * mu;
    }
  out.top_block = out.mu_X.block(n * k, n * k, k, k);
  out.expected = decompose(spectral_dolbeault(s, vol * kappa)).mu;
  out.equal_top = equal(out.top_block, out.expected);
  Mat rest = out.mu_X;
  rest.block(n * k, n * k, k, k) = zeros(k, k);
  out.other_blocks_zero = is_zero(rest);
  return out;
}

}  // namespace bvb
