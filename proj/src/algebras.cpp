#include "bvb/algebras.hpp"

#include "bvb/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvb {

namespace {

HPoly hmul(const HPoly& a, const HPoly& b) {
  HPoly out;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.c[i] != 0) out.add(b, a.c[i], i);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// d/dx_i of a sorted multiset; returns the multiplicity (0 if absent).
int derive(const Word& m, int i, Word& out) {
  auto lo = std::lower_bound(m.begin(), m.end(), i);
  auto hi = std::upper_bound(m.begin(), m.end(), i);
  int mult = static_cast<int>(hi - lo);
  if (mult == 0) return 0;
  out = m;
  out.erase(out.begin() + (lo - m.begin()));
  return mult;
}

Word merge(const Word& a, const Word& b) {
  Word w;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(w));
  return w;
}

}  // namespace

void add_term(WordElement& x, const Word& w, const HPoly& c) {
  if (c.zero()) return;
  auto& slot = x[w];
  slot.add(c);
  if (slot.zero()) x.erase(w);
}

WordElement word_scale(const WordElement& x, const Q& s) {
  WordElement out;
  if (s == 0) return out;
  for (auto& [w, c] : x) {
    HPoly h;
    h.add(c, s);
    out[w] = h;
  }
  return out;
}

WordElement word_sum(const WordElement& a, const WordElement& b) {
  WordElement out = a;
  for (auto& [w, c] : b) add_term(out, w, c);
  return out;
}

WeylAlgebra::WeylAlgebra(GradedVectorSpace V, Mat omega, std::vector<bool> inL)
    : V_(std::move(V)), omega_(std::move(omega)), inL_(std::move(inL)) {
  int n = V_.size();
  if (omega_.rows() != n || omega_.cols() != n || static_cast<int>(inL_.size()) != n)
    throw std::invalid_argument("WeylAlgebra: size mismatch");
  int nL = 0;
  for (int i = 0; i < n; ++i) {
    nL += inL_[i];
    for (int j = 0; j < n; ++j) {
      if (omega_(i, j) != 0 && V_.deg[i] + V_.deg[j] != 0)
        throw std::invalid_argument("WeylAlgebra: omega must have degree 0");
      if (omega_(j, i) != -sign_pow(static_cast<long>(V_.deg[i]) * V_.deg[j]) * omega_(i, j))
        throw std::invalid_argument("WeylAlgebra: omega must be graded antisymmetric");
      if (inL_[i] == inL_[j] && omega_(i, j) != 0)
        throw std::invalid_argument("WeylAlgebra: L and its complement must be isotropic");
    }
  }
  if (2 * nL != n || rank(omega_) != n) throw std::invalid_argument("WeylAlgebra: omega degenerate or L not half rank");
}

WordElement WeylAlgebra::one() const { return {{Word{}, HPoly(1)}}; }

WordElement WeylAlgebra::generator(int i) const { return {{Word{i}, HPoly(1)}}; }

int WeylAlgebra::sort_word(Word& w) const {
  int sign = 1;
  for (size_t i = 1; i < w.size(); ++i)
    for (size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      if (parity(V_.deg[w[j - 1]]) && parity(V_.deg[w[j]])) sign = -sign;
      std::swap(w[j - 1], w[j]);
    }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && parity(V_.deg[w[i]])) return 0;
  return sign;
}

WordElement WeylAlgebra::normal_order(const Word& w) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  WordElement out;
  size_t pos = w.size();
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!inL_[w[i]] && inL_[w[i + 1]]) {
      pos = i;
      break;
    }
  if (pos == w.size()) {
    Word l, p;
    for (int x : w) (inL_[x] ? l : p).push_back(x);
    int s = sort_word(l) * sort_word(p);
    if (s != 0) out[concat(l, p)] = HPoly(Q(s));
  } else {
    int p = w[pos], l = w[pos + 1];
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    out = word_scale(normal_order(swapped), Q(sign_pow(static_cast<long>(V_.deg[p]) * V_.deg[l])));
    if (omega_(p, l) != 0) {
      Word rest = w;
      rest.erase(rest.begin() + pos, rest.begin() + pos + 2);
      for (auto& [u, c] : normal_order(rest)) {
        HPoly h;
        h.add(c, omega_(p, l), 1);
        add_term(out, u, h);
      }
    }
  }
  memo_[w] = out;
  return out;
}

WordElement WeylAlgebra::product(const WordElement& a, const WordElement& b) const {
  WordElement out;
  for (auto& [wa, ca] : a)
    for (auto& [wb, cb] : b) {
      HPoly c = hmul(ca, cb);
      for (auto& [w, x] : normal_order(concat(wa, wb))) add_term(out, w, hmul(c, x));
    }
  return out;
}

bool WeylAlgebra::is_fock(const WordElement& f) const {
  for (auto& [w, c] : f)
    for (int x : w)
      if (inL_[x]) return false;
  return true;
}

WordElement WeylAlgebra::fock_action(const WordElement& f, const WordElement& a) const {
  if (!is_fock(f)) throw std::invalid_argument("fock_action: not a Fock element");
  WordElement out;
  for (auto& [w, c] : product(f, a)) {
    if (!w.empty() && inL_[w.front()]) continue;
    out[w] = c;
  }
  return out;
}

WordElement poly_product(const WordElement& f, const WordElement& g) {
  WordElement out;
  for (auto& [a, ca] : f)
    for (auto& [b, cb] : g) add_term(out, merge(a, b), hmul(ca, cb));
  return out;
}

WordElement star_product(const WordElement& f, const WordElement& g, const Mat& P) {
  int n = static_cast<int>(P.rows());
  WordElement out;
  for (auto& [a, ca] : f)
    for (auto& [b, cb] : g) {
      HPoly c = hmul(ca, cb);
      std::map<std::pair<Word, Word>, Q> t{{{a, b}, Q(1)}};
      Q scale = 1;
      for (int k = 0; !t.empty(); ++k) {
        for (auto& [uv, x] : t) {
          HPoly h;
          h.add(c, x * scale, k);
          add_term(out, merge(uv.first, uv.second), h);
        }
        std::map<std::pair<Word, Word>, Q> next;
        for (auto& [uv, x] : t)
          for (int i = 0; i < n; ++i) {
            Word du;
            int mi = derive(uv.first, i, du);
            if (mi == 0) continue;
            for (int j = 0; j < n; ++j) {
              if (P(i, j) == 0) continue;
              Word dv;
              int mj = derive(uv.second, j, dv);
              if (mj == 0) continue;
              Q& slot = next[{du, dv}];
              slot += x * P(i, j) * mi * mj;
            }
          }
        for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
        t.swap(next);
        scale /= Q(2 * (k + 1));
      }
    }
  return out;
}

WordElement weyl_symbol(const WeylAlgebra& W, const WordElement& a) {
  for (int d : W.space().deg)
    if (d != 0) throw std::invalid_argument("weyl_symbol: V must be ungraded");
  WordElement out;
  for (auto& [w, c] : a) {
    Word l, p;
    for (int x : w) (W.in_L(x) ? l : p).push_back(x);
    WordElement s = star_product({{l, HPoly(1)}}, {{p, HPoly(1)}}, W.omega());
    for (auto& [u, x] : s) add_term(out, u, hmul(x, c));
  }
  return out;
}

std::vector<Word> multisets(int n, int d) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Word> subsets(int n, int d) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

using Cell = std::pair<Word, Word>;  // (polynomial multiset, form subset)

struct BigradedBasis {
  std::vector<Cell> cells;
  std::map<Cell, int> index;
};

BigradedBasis bigraded_basis(int n, int p, int q) {
  BigradedBasis b;
  if (p < 0 || q < 0 || q > n) return b;
  for (auto& m : multisets(n, p))
    for (auto& s : subsets(n, q)) {
      b.index[{m, s}] = static_cast<int>(b.cells.size());
      b.cells.push_back({m, s});
    }
  return b;
}

// Rank of a map given per-basis-cell images.
size_t map_rank(const BigradedBasis& src, const BigradedBasis& dst,
                const std::function<void(const Cell&, std::vector<std::pair<Cell, Q>>&)>& f) {
  std::vector<SparseVec> cols;
  for (auto& c : src.cells) {
    std::vector<std::pair<Cell, Q>> img;
    f(c, img);
    std::map<int, Q> acc;
    for (auto& [t, x] : img) acc[dst.index.at(t)] += x;
    SparseVec v;
    for (auto& [i, x] : acc)
      if (x != 0) v.emplace_back(i, x);
    cols.push_back(std::move(v));
  }
  return sparse_rank(cols);
}

std::map<std::pair<int, int>, int> bigraded_homology(
    int n, int polyCut, int dp, int dq,
    const std::function<void(const Cell&, std::vector<std::pair<Cell, Q>>&)>& f) {
  std::map<std::pair<int, int>, int> out;
  for (int p = 0; p <= polyCut - 1; ++p)
    for (int q = 0; q <= n; ++q) {
      auto here = bigraded_basis(n, p, q);
      if (here.cells.empty()) continue;
      auto target = bigraded_basis(n, p + dp, q + dq);
      auto source = bigraded_basis(n, p - dp, q - dq);
      size_t out_rank = target.cells.empty() ? 0 : map_rank(here, target, f);
      size_t in_rank = source.cells.empty() ? 0 : map_rank(source, here, f);
      int h = static_cast<int>(here.cells.size() - out_rank - in_rank);
      if (h != 0) out[{p, q}] = h;
    }
  return out;
}

}  // namespace

std::map<std::pair<int, int>, int> lichnerowicz_cohomology(const Mat& Pi, int polyCut) {
  int n = static_cast<int>(Pi.rows());
  if (polyCut < 1) throw std::invalid_argument("lichnerowicz_cohomology: polyCut must be positive");
  // d(f theta_I) = sum Pi^{ij} (d_i f) theta_j theta_I
  auto d = [&](const Cell& c, std::vector<std::pair<Cell, Q>>& img) {
    for (int i = 0; i < n; ++i) {
      Word df;
      int mi = derive(c.first, i, df);
      if (mi == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (Pi(i, j) == 0 || std::binary_search(c.second.begin(), c.second.end(), j)) continue;
        auto at = std::lower_bound(c.second.begin(), c.second.end(), j);
        int before = static_cast<int>(at - c.second.begin());
        Word s = c.second;
        s.insert(s.begin() + before, j);
        img.push_back({{df, s}, Pi(i, j) * mi * sign_pow(before)});
      }
    }
  };
  return bigraded_homology(n, polyCut, -1, 1, d);
}

std::map<std::pair<int, int>, int> brylinski_homology_bigraded(const Mat& Pi, int polyCut) {
  int n = static_cast<int>(Pi.rows());
  if (polyCut < 1) throw std::invalid_argument("brylinski_homology: polyCut must be positive");
  // d(f dx_I) = sum_k (-1)^{k+1} {f, x_{i_k}} dx_{I - i_k},  {f, x_j} = sum_a Pi^{aj} d_a f
  auto d = [&](const Cell& c, std::vector<std::pair<Cell, Q>>& img) {
    for (size_t k = 0; k < c.second.size(); ++k) {
      int j = c.second[k];
      Word s = c.second;
      s.erase(s.begin() + k);
      for (int a = 0; a < n; ++a) {
        if (Pi(a, j) == 0) continue;
        Word df;
        int ma = derive(c.first, a, df);
        if (ma == 0) continue;
        img.push_back({{df, s}, Pi(a, j) * ma * sign_pow(static_cast<long>(k))});
      }
    }
  };
  return bigraded_homology(n, polyCut, -1, -1, d);
}

BrylinskiReport brylinski_homology(const Mat& Pi, int polyCut) {
  BrylinskiReport r;
  int n = static_cast<int>(Pi.rows());
  for (auto& [pq, h] : brylinski_homology_bigraded(Pi, polyCut)) r.by_degree[-pq.second] += h;
  int ker = n - static_cast<int>(rank(Pi));
  r.window_low = -n;
  r.window_high = -(n - ker);
  r.in_window = true;
  for (auto& [k, h] : r.by_degree)
    if (h != 0 && (k < r.window_low || k > r.window_high)) r.in_window = false;
  return r;
}

}  // namespace bvb
