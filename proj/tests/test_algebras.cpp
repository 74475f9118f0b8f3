#include "bvb/algebras.hpp"
#include "bvb/models.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <set>

using namespace bvbtest;

namespace {

// Darboux pairs x_i (index i), y_i (index m + i); L = span(y).
WeylAlgebra darboux(int m) {
  GradedVectorSpace V(std::vector<int>(2 * m, 0));
  Mat w = zeros(2 * m, 2 * m);
  std::vector<bool> inL(2 * m, false);
  for (int i = 0; i < m; ++i) {
    w(i, m + i) = 1;
    w(m + i, i) = -1;
    inL[m + i] = true;
  }
  return WeylAlgebra(V, w, inL);
}

// Degrees 0, 0, -1, 1 with omega(x, y) = 1 and omega(a, b) = omega(b, a) = 1; L = {y, a}.
WeylAlgebra graded_example() {
  GradedVectorSpace V({0, 0, -1, 1});
  Mat w = zeros(4, 4);
  w(0, 1) = 1;
  w(1, 0) = -1;
  w(2, 3) = 1;
  w(3, 2) = 1;
  return WeylAlgebra(V, w, {false, true, true, false});
}

WordElement h(const Q& c, int power = 0) {
  if (c == 0) return {};
  return {{Word{}, HPoly(c, power)}};
}

WordElement commutator(const WeylAlgebra& W, int v, int w) {
  auto a = W.generator(v), b = W.generator(w);
  int s = sign_pow(static_cast<long>(W.space().deg[v]) * W.space().deg[w]);
  return word_sum(W.product(a, b), word_scale(W.product(b, a), Q(-s)));
}

WordElement monomial(const Word& w) { return {{w, HPoly(1)}}; }

std::vector<WordElement> generator_words(const WeylAlgebra& W, int maxlen) {
  std::vector<WordElement> out{W.one()};
  std::vector<WordElement> layer{W.one()};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<WordElement> next;
    for (auto& x : layer)
      for (int i = 0; i < W.dim(); ++i) next.push_back(W.product(x, W.generator(i)));
    for (auto& x : next) out.push_back(x);
    layer = next;
  }
  return out;
}

Mat random_poisson(std::mt19937& g, int n) {
  Mat P = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      P(i, j) = rnd_q(g);
      P(j, i) = -P(i, j);
    }
  return P;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent dense model of the Lichnerowicz complex at fixed weight p + q.
// Exponent vectors for the polynomial part, bitmasks for the forms.
std::map<std::pair<int, int>, int> lichnerowicz_dense(const Mat& Pi, int polyCut) {
  int n = static_cast<int>(Pi.rows());
  std::map<std::pair<int, int>, int> out;
  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> exps =
      [&](int pos, int left, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
        if (pos == n) {
          if (left == 0) acc.push_back(cur);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          cur[pos] = e;
          exps(pos + 1, left - e, cur, acc);
        }
      };
  for (int wt = 0; wt <= polyCut - 1 + n; ++wt) {
    std::vector<std::pair<std::vector<int>, int>> cells;
    std::vector<int> deg;
    for (int q = 0; q <= n; ++q) {
      int p = wt - q;
      if (p < 0 || p > polyCut) continue;
      std::vector<std::vector<int>> ps;
      std::vector<int> cur(n, 0);
      exps(0, p, cur, ps);
      for (auto& e : ps)
        for (int mask = 0; mask < (1 << n); ++mask)
          if (__builtin_popcount(mask) == q) {
            cells.push_back({e, mask});
            deg.push_back(q);
          }
    }
    int N = static_cast<int>(cells.size());
    if (N == 0) continue;
    Mat d = zeros(N, N);
    for (int c = 0; c < N; ++c) {
      auto [e, mask] = cells[c];
      for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (Pi(i, j) == 0 || (mask >> j & 1)) continue;
          auto e2 = e;
          --e2[i];
          int m2 = mask | (1 << j);
          int before = __builtin_popcount(mask & ((1 << j) - 1));
          for (int r = 0; r < N; ++r)
            if (cells[r].first == e2 && cells[r].second == m2) d(r, c) += Pi(i, j) * e[i] * sign_pow(before);
        }
      }
    }
    CochainComplex cx(GradedVectorSpace(deg), d);
    REQUIRE(cx.square_zero());
    for (auto [q, dim] : cohomology_dims(cx)) {
      int p = wt - q;
      if (p <= polyCut - 1 && dim != 0) out[{p, q}] = dim;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Weyl commutator of generators is hbar omega") {
  for (auto W : {darboux(1), darboux(2), graded_example()})
    for (int v = 0; v < W.dim(); ++v)
      for (int w = 0; w < W.dim(); ++w) {
        auto c = commutator(W, v, w);
        CHECK(c == h(W.omega()(v, w), 1));
      }
}

TEST_CASE("Weyl product with omega = 0 pieces is commutative at hbar = 0") {
  auto W = darboux(2);
  auto words = generator_words(W, 2);
  for (auto& a : words)
    for (auto& b : words) {
      auto ab = W.product(a, b), ba = W.product(b, a);
      for (auto& [w, c] : ab) CHECK(c.at(0) == (ba.count(w) ? ba.at(w).at(0) : Q(0)));
    }
  // Product of two L letters never produces hbar.
  CHECK(W.product(W.generator(2), W.generator(3)) == monomial({2, 3}));
}

TEST_CASE("Weyl product is associative on generator triples and quadratic words") {
  for (auto W : {darboux(1), darboux(2), graded_example()}) {
    for (int a = 0; a < W.dim(); ++a)
      for (int b = 0; b < W.dim(); ++b)
        for (int c = 0; c < W.dim(); ++c) {
          auto x = W.generator(a), y = W.generator(b), z = W.generator(c);
          CHECK(W.product(W.product(x, y), z) == W.product(x, W.product(y, z)));
        }
    auto words = generator_words(W, 2);
    for (size_t i = 0; i < words.size(); i += 3)
      for (size_t j = 0; j < words.size(); j += 2)
        for (size_t k = 0; k < words.size(); k += 5)
          CHECK(W.product(W.product(words[i], words[j]), words[k]) ==
                W.product(words[i], W.product(words[j], words[k])));
  }
}

TEST_CASE("Fock module: vacuum killed by L, creation multiplies, annihilation differentiates") {
  auto W = darboux(2);
  auto vac = W.one();
  CHECK(W.fock_action(vac, W.generator(2)).empty());
  CHECK(W.fock_action(vac, W.generator(0)) == monomial({0}));
  // x0^2 x1 . y0 = 2 hbar x0 x1
  auto f = monomial({0, 0, 1});
  WordElement expect{{Word{0, 1}, HPoly(Q(2), 1)}};
  CHECK(W.fock_action(f, W.generator(2)) == expect);
  CHECK_THROWS(W.fock_action(W.generator(2), W.generator(0)));
}

TEST_CASE("Fock right-module axioms on all generator pairs") {
  for (auto W : {darboux(1), darboux(2), graded_example()}) {
    std::vector<WordElement> fs{W.one()};
    for (auto& w : generator_words(W, 2)) {
      WordElement f;
      for (auto& [u, c] : w)
        if (W.is_fock({{u, c}})) f[u] = c;
      if (!f.empty()) fs.push_back(f);
    }
    for (auto& f : fs) {
      CHECK(W.fock_action(f, W.one()) == f);
      for (int a = 0; a < W.dim(); ++a)
        for (int b = 0; b < W.dim(); ++b) {
          auto x = W.generator(a), y = W.generator(b);
          CHECK(W.fock_action(W.fock_action(f, x), y) == W.fock_action(f, W.product(x, y)));
        }
    }
  }
}

TEST_CASE("Fock degree pieces have the dimension of Sym(V/L)") {
  auto W = darboux(2);
  for (int d = 0; d <= 3; ++d) {
    std::set<Word> seen;
    for (auto& w : multisets(4, d)) {
      auto f = W.fock_action(W.one(), W.normal_order(w));
      for (auto& [u, c] : f)
        if (static_cast<int>(u.size()) == d) seen.insert(u);
    }
    CHECK(static_cast<long>(seen.size()) == binom(2 + d - 1, d));
  }
}

TEST_CASE("star product: commutator, Pi = 0, hbar^0 term") {
  std::mt19937 g(7);
  for (int n = 2; n <= 4; ++n) {
    Mat P = random_poisson(g, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto a = monomial({i}), b = monomial({j});
        auto c = word_sum(star_product(a, b, P), word_scale(star_product(b, a, P), -1));
        CHECK(c == h(P(i, j), 1));
      }
    for (auto& f : multisets(n, 2))
      for (auto& k : multisets(n, 2)) {
        CHECK(star_product(monomial(f), monomial(k), zeros(n, n)) == poly_product(monomial(f), monomial(k)));
        auto s = star_product(monomial(f), monomial(k), P);
        auto prod = poly_product(monomial(f), monomial(k));
        for (auto& [u, c] : prod) CHECK(s.at(u).at(0) == c.at(0));
      }
  }
}

TEST_CASE("star product is associative on cubic monomials") {
  std::mt19937 g(11);
  for (int n = 2; n <= 4; ++n) {
    Mat P = random_poisson(g, n);
    std::vector<Word> ms;
    for (int d = 1; d <= 3; ++d)
      for (auto& m : multisets(n, d)) ms.push_back(m);
    size_t step = n == 4 ? 5 : 1;
    for (size_t i = 0; i < ms.size(); i += step)
      for (size_t j = 0; j < ms.size(); ++j)
        for (size_t k = 0; k < ms.size(); k += step) {
          auto a = monomial(ms[i]), b = monomial(ms[j]), c = monomial(ms[k]);
          CHECK(star_product(star_product(a, b, P), c, P) == star_product(a, star_product(b, c, P), P));
        }
  }
}

TEST_CASE("Weyl normal ordering and Moyal product are intertwined by the symbol map") {
  for (int m = 1; m <= 2; ++m) {
    auto W = darboux(m);
    std::vector<WordElement> quad;
    for (int d = 0; d <= 2; ++d)
      for (auto& w : multisets(2 * m, d)) quad.push_back(W.normal_order(w));
    for (auto& a : quad)
      for (auto& b : quad)
        CHECK(weyl_symbol(W, W.product(a, b)) == star_product(weyl_symbol(W, a), weyl_symbol(W, b), W.omega()));
  }
}

TEST_CASE("Lichnerowicz cohomology") {
  SUBCASE("Pi = 0 gives all polyvectors") {
    for (int n = 1; n <= 3; ++n) {
      auto H = lichnerowicz_cohomology(zeros(n, n), 4);
      for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= n; ++q) CHECK(H[{p, q}] == binom(n + p - 1, p) * binom(n, q));
    }
  }
  SUBCASE("symplectic plane: only constants") {
    auto H = lichnerowicz_cohomology(poisson_symplectic(2), 5);
    CHECK(H == std::map<std::pair<int, int>, int>{{{0, 0}, 1}});
    CHECK(H == lichnerowicz_dense(poisson_symplectic(2), 5));
  }
  SUBCASE("symplectic plane plus a trivial direction is the Kunneth product") {
    Mat P = zeros(3, 3);
    P(0, 1) = 1;
    P(1, 0) = -1;
    auto H = lichnerowicz_cohomology(P, 5);
    std::map<std::pair<int, int>, int> expect;
    for (int p = 0; p <= 4; ++p) expect[{p, 0}] = expect[{p, 1}] = 1;
    CHECK(H == expect);
    CHECK(H == lichnerowicz_dense(P, 5));
  }
}

TEST_CASE("Lichnerowicz and Brylinski dims are invariant under a change of basis") {
  std::mt19937 g(5);
  for (int n = 2; n <= 3; ++n)
    for (const Mat& P : {poisson_zero(n), poisson_symplectic(n), poisson_rank2(n), random_poisson(g, n)}) {
      Mat T = random_invertible(g, n);
      Mat P2 = T * P * T.transpose();
      CHECK(lichnerowicz_cohomology(P, 4) == lichnerowicz_cohomology(P2, 4));
      CHECK(lichnerowicz_cohomology(P, 4) == lichnerowicz_dense(P, 4));
      CHECK(brylinski_homology_bigraded(P, 4) == brylinski_homology_bigraded(P2, 4));
    }
}

TEST_CASE("Brylinski homology window") {
  SUBCASE("Pi = 0 populates every degree -dim V .. 0") {
    for (int n = 1; n <= 3; ++n) {
      auto r = brylinski_homology(zeros(n, n), 6);
      CHECK(r.in_window);
      CHECK(r.window_low == -n);
      CHECK(r.window_high == 0);
      for (int k = -n; k <= 0; ++k) CHECK(r.by_degree[k] > 0);
    }
  }
  SUBCASE("symplectic plane is concentrated in degree -2") {
    auto r = brylinski_homology(poisson_symplectic(2), 6);
    CHECK(r.by_degree == std::map<int, int>{{-2, 1}});
    CHECK(r.in_window);
  }
  SUBCASE("rank 2 on dim 3") {
    auto r = brylinski_homology(poisson_rank2(3), 6);
    CHECK(r.window_low == -3);
    CHECK(r.window_high == -2);
    CHECK(r.in_window);
    // Kunneth of the symplectic plane (degree -2) with a line (degrees 0, -1).
    CHECK(r.by_degree[-2] > 0);
    CHECK(r.by_degree[-3] > 0);
    CHECK(r.by_degree.count(-1) == 0);
  }
}
