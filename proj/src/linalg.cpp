#include "bvb/linalg.hpp"

#include "bvb/sparse.hpp"

#include <stdexcept>

namespace bvb {

std::string to_string(const Q& q) {
  Q c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

Mat zeros(long r, long c) {
  Mat m(r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m(i, j) = 0;
  return m;
}

Mat identity(long n) {
  Mat m = zeros(n, n);
  for (long i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_zero(const Mat& m) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

bool equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Rref rref(Mat a) {
  Rref out;
  long rows = a.rows(), cols = a.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (sgn(a(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    Q inv = 1 / a(r, c);
    for (long j = c; j < cols; ++j) a(r, j) *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Q f = a(i, c);
      for (long j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.R = std::move(a);
  return out;
}

long rank(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<SparseVec> cols(a.cols());
  for (long j = 0; j < a.cols(); ++j)
    for (long i = 0; i < a.rows(); ++i)
      if (sgn(a(i, j)) != 0) cols[j].emplace_back(static_cast<int>(i), a(i, j));
  return static_cast<long>(sparse_rank(std::move(cols)));
}

Mat nullspace(const Mat& a) {
  long n = a.cols();
  if (a.rows() == 0) return identity(n);
  Rref r = rref(a);
  std::vector<bool> is_piv(n, false);
  for (int p : r.pivots) is_piv[p] = true;
  std::vector<int> free;
  for (long c = 0; c < n; ++c)
    if (!is_piv[c]) free.push_back(static_cast<int>(c));
  Mat k = zeros(n, static_cast<long>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], f) = -r.R(i, free[f]);
  }
  return k;
}

Mat column_basis(const Mat& a) {
  if (a.cols() == 0) return zeros(a.rows(), 0);
  Rref r = rref(a);
  Mat out(a.rows(), static_cast<long>(r.pivots.size()));
  for (size_t i = 0; i < r.pivots.size(); ++i) out.col(i) = a.col(r.pivots[i]);
  return out;
}

Mat extend_basis(const Mat& base, const Mat& extra) {
  Mat both = hcat(base, extra);
  if (both.cols() == 0) return zeros(base.rows(), 0);
  Rref r = rref(both);
  std::vector<int> pick;
  for (int p : r.pivots)
    if (p >= base.cols()) pick.push_back(p - static_cast<int>(base.cols()));
  Mat out(base.rows(), static_cast<long>(pick.size()));
  for (size_t i = 0; i < pick.size(); ++i) out.col(i) = extra.col(pick[i]);
  return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  long n = a.cols();
  Mat aug = hcat(a, b);
  Rref r = rref(aug);
  Vec x(n);
  for (long i = 0; i < n; ++i) x(i) = 0;
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == n) return std::nullopt;
    x(r.pivots[i]) = r.R(i, n);
  }
  return x;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  long n = a.rows();
  Rref r = rref(hcat(a, identity(n)));
  for (long i = 0; i < n; ++i)
    if (i >= static_cast<long>(r.pivots.size()) || r.pivots[i] != i)
      throw std::invalid_argument("singular matrix");
  return r.R.block(0, n, n, n);
}

Mat mul(const Mat& a, const Mat& b) {
  Mat out = zeros(a.rows(), b.cols());
  std::vector<std::vector<long>> nz(b.rows());
  for (long k = 0; k < b.rows(); ++k)
    for (long j = 0; j < b.cols(); ++j)
      if (sgn(b(k, j)) != 0) nz[k].push_back(j);
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      const Q& x = a(i, k);
      for (long j : nz[k]) out(i, j) += x * b(k, j);
    }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out = zeros(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Mat hcat(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Mat out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

Mat vcat(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
  Mat out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat out(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

}  // namespace bvb
