#pragma once

#include "bvb/graded.hpp"

#include <random>

namespace bvbtest {

using namespace bvb;

inline Q rnd_q(std::mt19937& g, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> u(lo, hi);
  return Q(u(g));
}

inline Mat random_invertible(std::mt19937& g, int n) {
  while (true) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rnd_q(g);
    if (rank(m) == n) return m;
  }
}

// Degree-preserving invertible change of basis.
inline Mat random_graded_invertible(std::mt19937& g, const GradedVectorSpace& s) {
  Mat t = zeros(s.size(), s.size());
  for (auto [k, n] : s.dims()) {
    auto idx = s.indices(k);
    Mat b = random_invertible(g, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(idx[i], idx[j]) = b(i, j);
  }
  return t;
}

struct NormalForm {
  CochainComplex c;
  std::map<int, int> h;  // true cohomology
  DeformationRetraction r;
};

// A complex built from cohomology lines and acyclic pairs a -> b, then
// scrambled by a random graded basis change. The retraction is known exactly.
inline NormalForm random_complex(std::mt19937& g, int maxdim, int lo = -1, int hi = 2) {
  std::uniform_int_distribution<int> deg(lo, hi), coin(0, 2);
  std::vector<int> degs;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> hs;
  while (static_cast<int>(degs.size()) < maxdim) {
    int k = deg(g);
    if (coin(g) == 0 || static_cast<int>(degs.size()) + 2 > maxdim) {
      hs.push_back(static_cast<int>(degs.size()));
      degs.push_back(k);
    } else {
      pairs.emplace_back(static_cast<int>(degs.size()), static_cast<int>(degs.size()) + 1);
      degs.push_back(k);
      degs.push_back(k + 1);
    }
  }
  int n = static_cast<int>(degs.size());
  GradedVectorSpace sp(degs);
  Mat d = zeros(n, n), k = zeros(n, n);
  for (auto [a, b] : pairs) {
    Q c = rnd_q(g, 1, 4);
    d(b, a) = c;
    k(a, b) = -1 / c;
  }
  std::vector<int> hdeg;
  for (int i : hs) hdeg.push_back(degs[i]);
  Mat i = zeros(n, static_cast<int>(hs.size())), p = zeros(static_cast<int>(hs.size()), n);
  for (size_t j = 0; j < hs.size(); ++j) {
    i(hs[j], j) = 1;
    p(j, hs[j]) = 1;
  }
  Mat t = random_graded_invertible(g, sp);
  Mat ti = inverse(t);
  NormalForm out;
  out.c = CochainComplex(sp, t * d * ti);
  for (int x : hdeg) ++out.h[x];
  GradedVectorSpace small(hdeg);
  out.r.big = out.c;
  out.r.small = CochainComplex(small, zeros(small.size(), small.size()));
  out.r.i = t * i;
  out.r.p = p * ti;
  out.r.k = t * k * ti;
  return out;
}

}  // namespace bvbtest
