#include "bvb/sym.hpp"
#include "bvb/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace bvb {

HPoly::HPoly(const Q& constant, int power) {
  if (sgn(constant) != 0) {
    c.assign(power + 1, Q(0));
    c[power] = constant;
  }
}

void HPoly::add(const Q& x, int power) {
  if (sgn(x) == 0) return;
  if (static_cast<int>(c.size()) <= power) c.resize(power + 1, Q(0));
  c[power] += x;
  trim();
}

void HPoly::add(const HPoly& o, const Q& scale, int shift) {
  for (size_t i = 0; i < o.c.size(); ++i)
    if (sgn(o.c[i]) != 0) {
      if (c.size() <= i + shift) c.resize(i + shift + 1, Q(0));
      c[i + shift] += scale * o.c[i];
    }
  trim();
}

void HPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

void HPoly::truncate(int cap) {
  if (static_cast<int>(c.size()) > cap + 1) c.resize(cap + 1);
  trim();
}

bool Monomial::operator<(const Monomial& o) const {
  if (n != o.n) return n < o.n;
  for (int i = 0; i < n; ++i)
    if (g[i] != o.g[i]) return g[i] < o.g[i];
  return false;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n != o.n) return false;
  for (int i = 0; i < n; ++i)
    if (g[i] != o.g[i]) return false;
  return true;
}

size_t MonomialHash::operator()(const Monomial& m) const {
  size_t h = 1469598103934665603ull ^ m.n;
  for (int i = 0; i < m.n; ++i) h = (h ^ m.g[i]) * 1099511628211ull;
  return h;
}

void SymElement::add(const Monomial& m, const Q& x, int power) {
  if (sgn(x) == 0) return;
  HPoly& p = terms[m];
  p.add(x, power);
  if (p.zero()) terms.erase(m);
}

void SymElement::add(const SymElement& o, const Q& scale, int shift) {
  for (const auto& [m, p] : o.terms) {
    HPoly& t = terms[m];
    t.add(p, scale, shift);
    if (t.zero()) terms.erase(m);
  }
}

void SymElement::add(const LinComb& o, int power) {
  for (const auto& [m, x] : o) add(m, x, power);
}

int SymElement::max_sym_degree() const {
  int s = -1;
  for (const auto& [m, p] : terms) s = std::max(s, m.size());
  return s;
}

int SymElement::max_hbar() const {
  int h = -1;
  for (const auto& [m, p] : terms) h = std::max(h, p.degree());
  return h;
}

SymAlgebra::SymAlgebra(GradedVectorSpace gens) : gens_(std::move(gens)) {
  int n = gens_.size();
  if (n > 65535) throw std::invalid_argument("too many generators");
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return gens_.deg[a] < gens_.deg[b]; });
  rank_.resize(n);
  deg_.resize(n);
  odd_.resize(n);
  for (int r = 0; r < n; ++r) {
    rank_[order_[r]] = r;
    deg_[r] = gens_.deg[order_[r]];
    odd_[r] = parity(deg_[r]) == 1;
  }
}

int SymAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < m.n; ++i) d += deg_[m.g[i]];
  return d;
}

Monomial SymAlgebra::generator(int orig) const {
  Monomial m;
  m.n = 1;
  m.g[0] = static_cast<uint16_t>(rank_[orig]);
  return m;
}

int SymAlgebra::normal_form(uint16_t* w, int n) const {
  int sign = 1;
  for (int i = 1; i < n; ++i)
    for (int j = i; j > 0 && w[j - 1] > w[j]; --j) {
      if (odd_[w[j - 1]] && odd_[w[j]]) sign = -sign;
      std::swap(w[j - 1], w[j]);
    }
  for (int i = 1; i < n; ++i)
    if (w[i] == w[i - 1] && odd_[w[i]]) return 0;
  return sign;
}

int SymAlgebra::multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
  if (a.n + b.n > Monomial::kMax) throw std::length_error("monomial too long");
  out.n = static_cast<uint8_t>(a.n + b.n);
  std::copy(a.g.begin(), a.g.begin() + a.n, out.g.begin());
  std::copy(b.g.begin(), b.g.begin() + b.n, out.g.begin() + a.n);
  return normal_form(out.g.data(), out.n);
}

SymElement SymAlgebra::multiply(const SymElement& a, const SymElement& b, int symCut, int hbarCut) const {
  SymElement out;
  for (const auto& [ma, pa] : a.terms)
    for (const auto& [mb, pb] : b.terms) {
      if (ma.n + mb.n > symCut) throw std::length_error("product exceeds the Sym-degree cap");
      if (pa.degree() + pb.degree() > hbarCut) throw std::length_error("product exceeds the hbar cap");
      Monomial m;
      int s = multiply(ma, mb, m);
      if (s == 0) continue;
      HPoly p;
      for (size_t i = 0; i < pa.c.size(); ++i)
        for (size_t j = 0; j < pb.c.size(); ++j) p.add(s * pa.c[i] * pb.c[j], static_cast<int>(i + j));
      HPoly& t = out.terms[m];
      t.add(p);
      if (t.zero()) out.terms.erase(m);
    }
  return out;
}

std::vector<Monomial> SymAlgebra::monomials_of_degree(int s) const {
  std::vector<Monomial> out;
  if (s > Monomial::kMax) throw std::length_error("Sym-degree above monomial capacity");
  Monomial cur;
  cur.n = static_cast<uint8_t>(s);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == s) {
      out.push_back(cur);
      return;
    }
    for (int r = start; r < ngens(); ++r) {
      cur.g[pos] = static_cast<uint16_t>(r);
      rec(pos + 1, odd_[r] ? r + 1 : r);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Monomial> SymAlgebra::monomials(int maxdeg) const {
  std::vector<Monomial> out;
  for (int s = 0; s <= maxdeg; ++s) {
    auto part = monomials_of_degree(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

GenMap SymAlgebra::genmap(const Mat& m, const SymAlgebra& target, int degree) const {
  if (m.rows() != target.ngens() || m.cols() != ngens()) throw std::invalid_argument("genmap: shape mismatch");
  GenMap f;
  f.degree = degree;
  f.col.resize(ngens());
  for (int r = 0; r < ngens(); ++r) {
    int src = order_[r];
    for (int t = 0; t < target.ngens(); ++t) {
      int dst = target.order_[t];
      if (sgn(m(dst, src)) != 0) f.col[r].emplace_back(t, m(dst, src));
    }
  }
  return f;
}

std::vector<std::vector<std::pair<int, Q>>> SymAlgebra::pair_table(const Mat& B) const {
  std::vector<std::vector<std::pair<int, Q>>> t(ngens());
  for (int r = 0; r < ngens(); ++r)
    for (int s = 0; s < ngens(); ++s) {
      const Q& x = B(order_[r], order_[s]);
      if (sgn(x) != 0) t[r].emplace_back(s, x);
    }
  return t;
}

std::vector<std::array<int, 3>> SymAlgebra::describe(const Monomial& m) const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < m.n;) {
    int j = i;
    while (j < m.n && m.g[j] == m.g[i]) ++j;
    out.push_back({deg_[m.g[i]], order_[m.g[i]], j - i});
    i = j;
  }
  return out;
}

void apply_derivation(const SymAlgebra& A, const GenMap& f, const Monomial& m, const Q& coeff, LinComb& out) {
  int prefix = 0;
  for (int i = 0; i < m.n; ++i) {
    int s0 = sign_pow(static_cast<long>(f.degree) * prefix);
    for (const auto& [r, c] : f.col[m.g[i]]) {
      Monomial w = m;
      w.g[i] = static_cast<uint16_t>(r);
      int s = A.normal_form(w.g.data(), w.n);
      if (s == 0) continue;
      Q& slot = out[w];
      slot += coeff * c * (s * s0);
      if (sgn(slot) == 0) out.erase(w);
    }
    prefix += A.deg(m.g[i]);
  }
}

void apply_algebra_map(const SymAlgebra& A, const SymAlgebra& B, const GenMap& f, const Monomial& m,
                       const Q& coeff, LinComb& out) {
  (void)A;
  std::vector<std::pair<Monomial, Q>> words{{Monomial{}, coeff}};
  for (int i = 0; i < m.n; ++i) {
    std::vector<std::pair<Monomial, Q>> next;
    for (const auto& [w, x] : words)
      for (const auto& [r, c] : f.col[m.g[i]]) {
        Monomial v = w;
        v.g[v.n++] = static_cast<uint16_t>(r);
        next.emplace_back(v, x * c);
      }
    words.swap(next);
  }
  for (auto& [w, x] : words) {
    int s = B.normal_form(w.g.data(), w.n);
    if (s == 0) continue;
    Q& slot = out[w];
    slot += x * s;
    if (sgn(slot) == 0) out.erase(w);
  }
}

void apply_laplacian(const SymAlgebra& A, const std::vector<std::vector<std::pair<int, Q>>>& pairs,
                     const Monomial& m, const Q& coeff, LinComb& out) {
  int before_i = 0;
  for (int i = 0; i < m.n; ++i) {
    int di = A.deg(m.g[i]);
    int before_j = before_i;
    for (int j = i + 1; j < m.n; ++j) {
      const auto& row = pairs[m.g[i]];
      for (const auto& [s, b] : row) {
        if (s != m.g[j]) continue;
        int dj = A.deg(m.g[j]);
        long e = static_cast<long>(di) * before_i + static_cast<long>(dj) * before_j;
        Monomial rest;
        for (int l = 0; l < m.n; ++l)
          if (l != i && l != j) rest.g[rest.n++] = m.g[l];
        Q& slot = out[rest];
        slot += coeff * b * sign_pow(e);
        if (sgn(slot) == 0) out.erase(rest);
      }
      before_j += A.deg(m.g[j]);
    }
    before_i += di;
  }
}

LinComb SymComplex::apply_Q(const Monomial& m) const {
  LinComb out;
  apply_derivation(alg, q, m, Q(1), out);
  return out;
}

LinComb SymComplex::apply_Delta(const Monomial& m) const {
  LinComb out;
  if (quantum()) apply_laplacian(alg, pairs, m, Q(1), out);
  return out;
}

SymElement SymComplex::apply_Q(const SymElement& x) const {
  SymElement out;
  for (const auto& [m, p] : x.terms) {
    LinComb l = apply_Q(m);
    for (size_t j = 0; j < p.c.size(); ++j)
      if (sgn(p.c[j]) != 0)
        for (const auto& [w, c] : l) out.add(w, c * p.c[j], static_cast<int>(j));
  }
  return out;
}

SymElement SymComplex::apply_Delta(const SymElement& x) const {
  SymElement out;
  for (const auto& [m, p] : x.terms) {
    LinComb l = apply_Delta(m);
    for (size_t j = 0; j < p.c.size(); ++j)
      if (sgn(p.c[j]) != 0)
        for (const auto& [w, c] : l) out.add(w, c * p.c[j], static_cast<int>(j));
  }
  return out;
}

SymElement SymComplex::apply(const SymElement& x) const {
  SymElement out = apply_Q(x);
  if (quantum()) {
    SymElement d = apply_Delta(x);
    for (auto& [m, p] : d.terms) {
      HPoly shifted;
      shifted.add(p, 1, 1);
      shifted.truncate(hbarCut);
      if (!shifted.zero()) {
        HPoly& t = out.terms[m];
        t.add(shifted);
        if (t.zero()) out.terms.erase(m);
      }
    }
  }
  return out;
}

SymComplex make_sym_complex(const GradedVectorSpace& W, const Mat& dW, const Mat& BW, int symCut, int hbarCut) {
  SymComplex c;
  c.alg = SymAlgebra(W);
  c.dW = dW;
  c.BW = BW;
  c.symCut = symCut;
  c.hbarCut = BW.size() > 0 ? hbarCut : 0;
  c.q = c.alg.genmap(dW, c.alg, 1);
  if (BW.size() > 0) c.pairs = c.alg.pair_table(BW);
  return c;
}

namespace {

struct BlockKey {
  int deg;
  int weight;
  bool operator<(const BlockKey& o) const { return std::tie(weight, deg) < std::tie(o.weight, o.deg); }
};

// Columns of the total differential for one weight block, in block-local indices.
void block_column(const SymComplex& c, const Monomial& m, int j,
                  const std::unordered_map<Monomial, int, MonomialHash>& index, SparseVec& col) {
  col.clear();
  LinComb img = c.apply_Q(m);
  if (c.quantum() && j < c.hbarCut) {
    LinComb d = c.apply_Delta(m);
    for (auto& [w, x] : d) {
      Q& slot = img[w];
      slot += x;
      if (sgn(slot) == 0) img.erase(w);
    }
  }
  for (auto& [w, x] : img) col.emplace_back(index.at(w), x);
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

std::map<int, int> sym_cohomology(const SymComplex& c, int maxSym) {
  if (maxSym < 0) maxSym = c.symCut;
  if (maxSym > c.symCut) throw std::invalid_argument("filtration piece above symCut");
  int h = c.quantum() ? c.hbarCut : 0;
  std::vector<std::vector<Monomial>> by_s(maxSym + 1);
  for (int s = 0; s <= maxSym; ++s) by_s[s] = c.alg.monomials_of_degree(s);
  std::map<int, int> dims;
  // Q keeps (s, j); hbar*Delta maps (s, j) to (s-2, j+1); both keep w = s + 2j.
  for (int w = 0; w <= maxSym + 2 * h; ++w) {
    std::vector<Monomial> basis;
    std::vector<int> hpow;
    for (int j = 0; j <= h; ++j) {
      int s = w - 2 * j;
      if (s < 0 || s > maxSym) continue;
      for (const auto& m : by_s[s]) {
        basis.push_back(m);
        hpow.push_back(j);
      }
    }
    if (basis.empty()) continue;
    std::unordered_map<Monomial, int, MonomialHash> index;
    index.reserve(basis.size() * 2);
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    DisjointSets ds(basis.size());
    std::vector<SparseVec> all(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
      block_column(c, basis[i], hpow[i], index, all[i]);
      for (auto& [r, x] : all[i]) ds.unite(i, r);
    }
    std::map<size_t, std::vector<int>> comps;
    for (size_t i = 0; i < basis.size(); ++i) comps[ds.find(i)].push_back(static_cast<int>(i));
    for (auto& [root, members] : comps) {
      std::map<int, std::vector<SparseVec>> cols;
      std::map<int, int> count;
      for (int i : members) {
        int k = c.alg.degree(basis[i]);
        ++count[k];
        if (!all[i].empty()) cols[k].push_back(std::move(all[i]));
      }
      std::map<int, long> rk;
      for (auto& [k, v] : cols) rk[k] = static_cast<long>(sparse_rank(std::move(v)));
      for (auto& [k, n] : count) {
        long r_out = rk.count(k) ? rk[k] : 0;
        long r_in = rk.count(k - 1) ? rk[k - 1] : 0;
        dims[k] += static_cast<int>(n - r_out - r_in);
      }
    }
  }
  return prune(dims);
}

bool is_coboundary(const SymComplex& c, const SymElement& x) {
  int h = c.quantum() ? c.hbarCut : 0;
  // (weight, degree) -> sparse coordinates of x, keyed by monomial
  std::map<std::pair<int, int>, std::map<Monomial, Q>> blocks;
  for (auto& [m, p] : x.terms)
    for (int j = 0; j <= p.degree(); ++j) {
      if (sgn(p.at(j)) == 0) continue;
      if (m.n > c.symCut || j > h) throw std::invalid_argument("is_coboundary: element outside the truncation");
      blocks[{m.n + 2 * j, c.alg.degree(m)}][m] = p.at(j);
    }
  std::map<int, std::vector<Monomial>> by_s;
  for (auto& [wk, coords] : blocks) {
    auto [w, k] = wk;
    std::vector<Monomial> basis;
    std::vector<int> hpow;
    for (int j = 0; j <= h; ++j) {
      int s = w - 2 * j;
      if (s < 0 || s > c.symCut) continue;
      if (!by_s.count(s)) by_s[s] = c.alg.monomials_of_degree(s);
      for (const auto& m : by_s[s]) {
        basis.push_back(m);
        hpow.push_back(j);
      }
    }
    std::unordered_map<Monomial, int, MonomialHash> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    Eliminator elim;
    SparseVec col;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (c.alg.degree(basis[i]) != k - 1) continue;
      block_column(c, basis[i], hpow[i], index, col);
      elim.insert(col);
    }
    SparseVec target;
    for (auto& [m, q] : coords) target.emplace_back(index.at(m), q);
    std::sort(target.begin(), target.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!elim.in_span(target)) return false;
  }
  return true;
}

std::map<std::pair<int, int>, int> delta_cohomology(const SymAlgebra& A,
                                                    const std::vector<std::vector<std::pair<int, Q>>>& pairs,
                                                    int maxSym) {
  std::map<std::pair<int, int>, int> out;
  std::vector<Monomial> basis = A.monomials(maxSym);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  // Delta keeps 2*deg + s, so Eliminators per (deg, s) see disjoint targets.
  std::map<std::pair<int, int>, Eliminator> elim;
  std::map<std::pair<int, int>, int> count;
  for (const auto& m : basis) {
    LinComb img;
    apply_laplacian(A, pairs, m, Q(1), img);
    SparseVec col;
    for (auto& [w, x] : img) col.emplace_back(index.at(w), x);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::pair<int, int> key{A.degree(m), m.size()};
    ++count[key];
    elim[key].insert(col);
  }
  for (auto& [key, n] : count) {
    auto [k, s] = key;
    if (s > maxSym - 2) continue;
    long r_out = elim[key].rank();
    auto src = std::make_pair(k - 1, s + 2);
    long r_in = elim.count(src) ? static_cast<long>(elim[src].rank()) : 0;
    int hdim = static_cast<int>(n - r_out - r_in);
    if (hdim != 0) out[key] = hdim;
  }
  return out;
}

StructuralCheck check_structure(const SymComplex& c) {
  StructuralCheck out;
  for (const auto& m : c.alg.monomials(c.symCut)) {
    ++out.monomials;
    SymElement x;
    x.add(m, Q(1));
    if (!c.apply_Q(c.apply_Q(x)).zero()) out.q2 = false;
    if (c.quantum()) {
      if (!c.apply_Delta(c.apply_Delta(x)).zero()) out.delta2 = false;
      SymElement a = c.apply_Q(c.apply_Delta(x));
      a.add(c.apply_Delta(c.apply_Q(x)));
      if (!a.zero()) out.anticommute = false;
    }
    if (!c.apply(c.apply(x)).zero()) out.total2 = false;
  }
  return out;
}

}  // namespace bvb
