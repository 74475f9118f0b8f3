#include "bvb/graded.hpp"

#include <stdexcept>

namespace bvb {

GradedVectorSpace::GradedVectorSpace(std::vector<int> degrees, std::vector<std::string> labels)
    : deg(std::move(degrees)), label(std::move(labels)) {
  if (label.empty())
    for (size_t i = 0; i < deg.size(); ++i) label.push_back("e" + std::to_string(i));
  if (label.size() != deg.size()) throw std::invalid_argument("label count mismatch");
}

GradedVectorSpace GradedVectorSpace::from_dims(const std::map<int, int>& dims, const std::string& prefix) {
  std::vector<int> d;
  std::vector<std::string> l;
  for (auto [k, n] : dims) {
    if (n < 0) throw std::invalid_argument("negative dimension");
    for (int j = 0; j < n; ++j) {
      d.push_back(k);
      l.push_back(prefix + "[" + std::to_string(k) + "," + std::to_string(j) + "]");
    }
  }
  return GradedVectorSpace(d, l);
}

std::map<int, int> GradedVectorSpace::dims() const {
  std::map<int, int> out;
  for (int k : deg) ++out[k];
  return out;
}

std::vector<int> GradedVectorSpace::indices(int k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (deg[i] == k) out.push_back(i);
  return out;
}

Mat GradedVectorSpace::sign_matrix() const {
  Mat s = zeros(size(), size());
  for (int i = 0; i < size(); ++i) s(i, i) = sign_pow(deg[i]);
  return s;
}

CochainComplex::CochainComplex(GradedVectorSpace s, Mat diff) : space(std::move(s)), d(std::move(diff)) {
  if (d.rows() != space.size() || d.cols() != space.size())
    throw std::invalid_argument("differential has wrong shape");
  if (!respects_degree()) throw std::invalid_argument("differential is not of degree +1");
}

Mat CochainComplex::d_at(int k) const { return submatrix(d, space.indices(k + 1), space.indices(k)); }

bool CochainComplex::square_zero() const { return is_zero(mul(d, d)); }

bool CochainComplex::respects_degree() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (sgn(d(i, j)) != 0 && space.deg[i] != space.deg[j] + 1) return false;
  return true;
}

Mat GradedMap::at(int k) const { return submatrix(m, target.indices(k + shift), source.indices(k)); }

bool GradedMap::respects_degree() const {
  if (m.rows() != target.size() || m.cols() != source.size()) return false;
  for (int i = 0; i < target.size(); ++i)
    for (int j = 0; j < source.size(); ++j)
      if (sgn(m(i, j)) != 0 && target.deg[i] != source.deg[j] + shift) return false;
  return true;
}

bool is_chain_map(const CochainComplex& src, const CochainComplex& dst, const GradedMap& f) {
  if (!f.respects_degree()) return false;
  Mat lhs = dst.d * f.m;
  Mat rhs = f.m * src.d;
  if (f.shift % 2 != 0) rhs = -rhs;
  return equal(lhs, rhs);
}

bool ShiftedPairing::respects_degree() const {
  for (int i = 0; i < space.size(); ++i)
    for (int j = 0; j < space.size(); ++j)
      if (sgn(B(i, j)) != 0 && space.deg[i] + space.deg[j] + degree != 0) return false;
  return true;
}

bool ShiftedPairing::has_symmetry() const {
  if (eps == 0) return true;
  for (int a = 0; a < space.size(); ++a)
    for (int b = 0; b < space.size(); ++b) {
      Q expect = B(a, b) * (eps * sign_pow(static_cast<long>(space.deg[a]) * space.deg[b]));
      if (B(b, a) != expect) return false;
    }
  return true;
}

bool ShiftedPairing::nondegenerate() const { return rank(B) == space.size(); }

int Cohomology::total() const {
  int t = 0;
  for (auto [k, n] : dims) t += n;
  return t;
}

Cohomology cohomology(const CochainComplex& c) {
  if (!c.square_zero()) throw std::invalid_argument("cohomology: d^2 != 0");
  Cohomology out;
  std::map<int, int> dims = c.space.dims();
  for (auto [k, n] : dims) {
    std::vector<int> here = c.space.indices(k);
    std::vector<int> up = c.space.indices(k + 1);
    std::vector<int> down = c.space.indices(k - 1);
    Mat z = up.empty() ? identity(n) : nullspace(submatrix(c.d, up, here));
    Mat b = down.empty() ? zeros(n, 0) : column_basis(submatrix(c.d, here, down));
    Mat local = extend_basis(b, z);
    Mat flat = zeros(c.size(), local.cols());
    for (size_t i = 0; i < here.size(); ++i) flat.row(here[i]) = local.row(i);
    out.dims[k] = static_cast<int>(local.cols());
    out.reps[k] = flat;
  }
  out.dims = prune(out.dims);
  return out;
}

std::map<int, int> cohomology_dims(const CochainComplex& c) {
  if (!c.square_zero()) throw std::invalid_argument("cohomology: d^2 != 0");
  std::map<int, int> out;
  std::map<int, long> rk;
  std::map<int, int> dims = c.space.dims();
  for (auto [k, n] : dims) {
    std::vector<int> up = c.space.indices(k + 1);
    rk[k] = up.empty() ? 0 : rank(submatrix(c.d, up, c.space.indices(k)));
  }
  for (auto [k, n] : dims) {
    long below = rk.count(k - 1) ? rk[k - 1] : 0;
    out[k] = static_cast<int>(n - rk[k] - below);
  }
  return prune(out);
}

std::map<int, int> prune(std::map<int, int> dims) {
  for (auto it = dims.begin(); it != dims.end();)
    it = (it->second == 0) ? dims.erase(it) : std::next(it);
  return dims;
}

std::map<int, int> kunneth(const std::map<int, int>& a, const std::map<int, int>& b) {
  std::map<int, int> out;
  for (auto [i, x] : a)
    for (auto [j, y] : b) out[i + j] += x * y;
  return prune(out);
}

CochainComplex tensor(const CochainComplex& a, const CochainComplex& b) {
  std::vector<int> deg;
  std::vector<std::string> lab;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      deg.push_back(a.space.deg[i] + b.space.deg[j]);
      lab.push_back(a.space.label[i] + "*" + b.space.label[j]);
    }
  Mat d = kron(a.d, identity(b.size())) + kron(a.space.sign_matrix(), b.d);
  return CochainComplex(GradedVectorSpace(deg, lab), d);
}

CochainComplex shift(const CochainComplex& c, int k) {
  std::vector<int> deg = c.space.deg;
  for (int& x : deg) x -= k;
  Mat d = c.d;
  if (k % 2 != 0) d = -d;
  return CochainComplex(GradedVectorSpace(deg, c.space.label), d);
}

CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b) {
  std::vector<int> deg = a.space.deg;
  std::vector<std::string> lab = a.space.label;
  deg.insert(deg.end(), b.space.deg.begin(), b.space.deg.end());
  lab.insert(lab.end(), b.space.label.begin(), b.space.label.end());
  Mat d = zeros(a.size() + b.size(), a.size() + b.size());
  d.block(0, 0, a.size(), a.size()) = a.d;
  d.block(a.size(), a.size(), b.size(), b.size()) = b.d;
  return CochainComplex(GradedVectorSpace(deg, lab), d);
}

CochainComplex dual(const CochainComplex& c) {
  std::vector<int> deg = c.space.deg;
  std::vector<std::string> lab;
  for (int& x : deg) x = -x;
  for (const auto& l : c.space.label) lab.push_back(l + "^");
  Mat d = -(Mat(c.d.transpose()) * c.space.sign_matrix());
  return CochainComplex(GradedVectorSpace(deg, lab), d);
}

ChainMap double_dual_map(const CochainComplex& c) {
  CochainComplex dd = dual(dual(c));
  return ChainMap{c.space, dd.space, 0, c.space.sign_matrix()};
}

Mat pairing_invariance_defect(const CochainComplex& c, const Mat& B) {
  return mul(Mat(c.d.transpose()), B) + mul(c.space.sign_matrix(), mul(B, c.d));
}

RetractionCheck check_retraction(const DeformationRetraction& r) {
  RetractionCheck out;
  const Mat& D = r.big.d;
  const Mat& d = r.small.d;
  out.i_chain = equal(mul(D, r.i), mul(r.i, d));
  out.p_chain = equal(mul(d, r.p), mul(r.p, D));
  out.pi_id = equal(mul(r.p, r.i), identity(r.small.size()));
  out.homotopy = equal(mul(r.i, r.p) - identity(r.big.size()), Mat(mul(D, r.k) + mul(r.k, D)));
  out.ki = is_zero(mul(r.k, r.i));
  out.pk = is_zero(mul(r.p, r.k));
  out.kk = is_zero(mul(r.k, r.k));
  return out;
}

DeformationRetraction normalize(const DeformationRetraction& r) {
  DeformationRetraction out = r;
  Mat pi = identity(r.big.size()) - mul(r.i, r.p);
  Mat k1 = mul(mul(pi, r.k), pi);
  out.k = -mul(mul(k1, r.big.d), k1);
  return out;
}

DeformationRetraction hpl(const DeformationRetraction& r, const Mat& delta) {
  int n = r.big.size();
  Mat D = r.big.d + delta;
  if (!is_zero(mul(D, D))) throw std::invalid_argument("hpl: perturbed differential does not square to zero");
  Mat t = mul(delta, r.k);
  Mat power = identity(n);
  Mat series = zeros(n, n);
  int steps = 0;
  while (!is_zero(power)) {
    series += power;
    power = mul(power, t);
    if (++steps > n + 1) throw std::invalid_argument("hpl: delta k is not nilpotent");
  }
  Mat A = mul(series, delta);
  DeformationRetraction out;
  out.big = CochainComplex(r.big.space, D);
  out.i = r.i + mul(mul(r.k, A), r.i);
  out.p = r.p + mul(mul(r.p, A), r.k);
  out.k = r.k + mul(mul(r.k, A), r.k);
  out.small = CochainComplex(r.small.space, r.small.d + mul(mul(r.p, A), r.i));
  return out;
}

}  // namespace bvb
namespace bvb {

DeformationRetraction standard_retraction(const CochainComplex& c) {
  Cohomology h = cohomology(c);
  const int n = c.size();
  // Per degree: C^k = B^k + H^k + S^k with d : S^k -> B^{k+1} bijective.
  // `all` lists these blocks degree by degree; k sends d s to -s.
  std::map<int, Mat> S;
  for (auto [deg, dim] : c.space.dims()) {
    std::vector<int> here = c.space.indices(deg);
    std::vector<int> up = c.space.indices(deg + 1);
    Mat z = up.empty() ? identity(dim) : nullspace(submatrix(c.d, up, here));
    Mat s = extend_basis(z, identity(dim));
    Mat flat = zeros(n, s.cols());
    for (size_t r = 0; r < here.size(); ++r) flat.row(here[r]) = s.row(r);
    S[deg] = flat;
  }
  Mat all = zeros(n, 0), inc = zeros(n, 0);
  std::vector<int> hdeg;
  std::vector<std::pair<int, int>> kpairs;  // (column of d s, column of s)
  std::map<int, int> s_start;
  for (auto [deg, dim] : c.space.dims()) {
    if (S.count(deg - 1)) {
      int base = static_cast<int>(all.cols());
      all = hcat(all, mul(c.d, S[deg - 1]));
      for (long j = 0; j < S[deg - 1].cols(); ++j) kpairs.emplace_back(base + j, s_start[deg - 1] + j);
    }
    if (h.reps.count(deg)) {
      all = hcat(all, h.reps[deg]);
      inc = hcat(inc, h.reps[deg]);
      for (long j = 0; j < h.reps[deg].cols(); ++j) hdeg.push_back(deg);
    }
    s_start[deg] = static_cast<int>(all.cols());
    all = hcat(all, S[deg]);
  }
  Mat inv = inverse(all);
  Mat k_ad = zeros(n, n);
  for (auto [b, s] : kpairs) k_ad(s, b) = -1;
  const long m = static_cast<long>(hdeg.size());
  Mat p = zeros(m, n);
  // Cohomology coordinates sit in the same order in `all` as in `inc`.
  {
    long row = 0, col = 0;
    for (auto [deg, dim] : c.space.dims()) {
      if (S.count(deg - 1)) col += S[deg - 1].cols();
      if (h.reps.count(deg))
        for (long j = 0; j < h.reps[deg].cols(); ++j) p.row(row++) = inv.row(col++);
      col += S[deg].cols();
    }
  }
  DeformationRetraction r;
  r.big = c;
  r.small = CochainComplex(GradedVectorSpace(hdeg), zeros(m, m));
  r.i = inc;
  r.p = p;
  r.k = mul(mul(all, k_ad), inv);
  return r;
}

}  // namespace bvb
