#include "bvb/bv.hpp"
#include "bvb/sparse.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace bvb {

Mat shifted_form(const GradedVectorSpace& F, const Mat& B) {
  Mat out = B;
  for (int a = 0; a < F.size(); ++a)
    if (parity(F.deg[a] - 1) == 1) out.row(a) = -out.row(a);
  return out;
}

SymComplex sym_observables(const CochainComplex& F, const Mat& B, int symCut, int hbarCut) {
  if (!F.square_zero()) throw std::invalid_argument("sym_observables: d^2 != 0");
  GradedVectorSpace W = F.space;
  for (int& k : W.deg) k -= 1;
  if (B.size() == 0) return make_sym_complex(W, -F.d, Mat(), symCut, hbarCut);
  ShiftedPairing p{F.space, -1, -1, B};
  if (!p.respects_degree()) throw std::invalid_argument("sym_observables: pairing is not of degree -1");
  if (!p.has_symmetry()) throw std::invalid_argument("sym_observables: pairing is not graded antisymmetric");
  if (!is_zero(pairing_invariance_defect(F, B))) throw std::invalid_argument("sym_observables: pairing is not Q-invariant");
  SymComplex c = make_sym_complex(W, -F.d, shifted_form(F.space, B), symCut, hbarCut);
  // (Q + hbar Delta)^2 = 0 is decided on quadratic monomials; assert it there.
  SymComplex small = c;
  small.symCut = std::min(2, symCut);
  if (!check_structure(small).all()) throw std::logic_error("sym_observables: (Q + hbar Delta)^2 != 0");
  return c;
}

SymComplex twisted_envelope(const CochainComplex& Lperp, const Mat& mu, int symCut, int hbarCut) {
  CochainComplex F = shift(Lperp, -1);
  if (mu.size() > 0 && !is_zero(pairing_invariance_defect(F, mu)))
    throw std::invalid_argument("twisted_envelope: mu is not a cocycle");
  return sym_observables(F, mu, symCut, hbarCut);
}

SymOp lift(std::function<void(const Monomial&, const Q&, LinComb&)> f, int hbarCap) {
  return [f, hbarCap](const SymElement& x) {
    std::vector<LinComb> by_power;
    for (const auto& [m, p] : x.terms)
      for (size_t j = 0; j < p.c.size(); ++j) {
        if (static_cast<int>(j) > hbarCap || sgn(p.c[j]) == 0) continue;
        if (by_power.size() <= j) by_power.resize(j + 1);
        f(m, p.c[j], by_power[j]);
      }
    SymElement out;
    for (size_t j = 0; j < by_power.size(); ++j) out.add(by_power[j], static_cast<int>(j));
    return out;
  };
}

namespace {

SymElement sub(SymElement a, const SymElement& b) {
  a.add(b, Q(-1));
  return a;
}

// Symmetrized homotopy: sum over j and splittings A|B of the remaining factors with
// weight |A|!|B|!/n!, term (prod_A x) K(x_j) (prod_B IP x).
void symmetrized_homotopy(const SymAlgebra& A, const GenMap& k, const GenMap& ip, const Monomial& m,
                          const Q& coeff, LinComb& out) {
  int n = m.n;
  if (n == 0) return;
  std::vector<mpz_class> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  for (int j = 0; j < n; ++j) {
    std::vector<int> others;
    for (int l = 0; l < n; ++l)
      if (l != j) others.push_back(l);
    int no = n - 1;
    for (int mask = 0; mask < (1 << no); ++mask) {
      std::vector<int> order, a_pos, b_pos;
      for (int t = 0; t < no; ++t)
        if (mask & (1 << t)) a_pos.push_back(others[t]);
        else b_pos.push_back(others[t]);
      order = a_pos;
      order.push_back(j);
      order.insert(order.end(), b_pos.begin(), b_pos.end());
      int sign = 1;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (order[u] > order[v] && A.odd(m.g[order[u]]) && A.odd(m.g[order[v]])) sign = -sign;
      long adeg = 0;
      for (int t : a_pos) adeg += A.deg(m.g[t]);
      sign *= sign_pow(adeg * k.degree);
      Q w = Q(fact[a_pos.size()] * fact[b_pos.size()]) / Q(fact[n]);
      std::vector<std::pair<Monomial, Q>> words{{Monomial{}, coeff * w * sign}};
      for (int t : a_pos)
        for (auto& [word, x] : words) word.g[word.n++] = m.g[t];
      auto extend = [&](const std::vector<std::pair<int, Q>>& col) {
        std::vector<std::pair<Monomial, Q>> next;
        for (const auto& [word, x] : words)
          for (const auto& [r, c] : col) {
            Monomial v = word;
            v.g[v.n++] = static_cast<uint16_t>(r);
            next.emplace_back(v, x * c);
          }
        words.swap(next);
      };
      extend(k.col[m.g[j]]);
      for (int t : b_pos) extend(ip.col[m.g[t]]);
      for (auto& [word, x] : words) {
        int s = A.normal_form(word.g.data(), word.n);
        if (s == 0) continue;
        Q& slot = out[word];
        slot += x * s;
        if (sgn(slot) == 0) out.erase(word);
      }
    }
  }
}

}  // namespace

SymRetraction sym_retraction(const DeformationRetraction& r, int symCut, int checkSym) {
  RetractionCheck lin = check_retraction(r);
  if (!lin.identities()) throw std::invalid_argument("sym_retraction: linear data is not a retraction");
  SymRetraction out;
  out.big = sym_observables(r.big, Mat(), symCut, 0);
  out.small = sym_observables(r.small, Mat(), symCut, 0);
  const SymAlgebra& B = out.big.alg;
  const SymAlgebra& S = out.small.alg;
  // On W = F[1] the differential is -d, so the homotopy becomes -k.
  GenMap gi = S.genmap(r.i, B, 0);
  GenMap gp = B.genmap(r.p, S, 0);
  GenMap gk = B.genmap(-r.k, B, -1);
  GenMap gip = B.genmap(r.i * r.p, B, 0);
  auto big = std::make_shared<SymComplex>(out.big);
  auto small = std::make_shared<SymComplex>(out.small);
  out.D_big = [big](const SymElement& x) { return big->apply(x); };
  out.D_small = [small](const SymElement& x) { return small->apply(x); };
  out.i = lift([gi, big, small](const Monomial& m, const Q& c, LinComb& o) { apply_algebra_map(small->alg, big->alg, gi, m, c, o); }, 1 << 20);
  out.p = lift([gp, big, small](const Monomial& m, const Q& c, LinComb& o) { apply_algebra_map(big->alg, small->alg, gp, m, c, o); }, 1 << 20);
  out.k = lift([gk, gip, big](const Monomial& m, const Q& c, LinComb& o) { symmetrized_homotopy(big->alg, gk, gip, m, c, o); }, 1 << 20);
  RetractionCheck raw = check_sym_retraction(out, checkSym < 0 ? symCut : std::min(checkSym, symCut));
  if (!raw.identities()) throw std::logic_error("sym_retraction: symmetrized homotopy fails the identities");
  if (!raw.all()) {
    SymOp i = out.i, p = out.p, k = out.k, D = out.D_big;
    SymOp pi = [i, p](const SymElement& x) { return sub(x, i(p(x))); };
    SymOp k1 = [pi, k](const SymElement& x) { return pi(k(pi(x))); };
    out.k = [k1, D](const SymElement& x) {
      SymElement y = k1(D(k1(x)));
      SymElement z;
      z.add(y, Q(-1));
      return z;
    };
    out.normalized = true;
  }
  return out;
}

SymRetraction perturb_quantum(const SymRetraction& r, const SymComplex& big_quantum, const SymComplex& small_quantum) {
  auto bq = std::make_shared<SymComplex>(big_quantum);
  int cap = big_quantum.hbarCut;
  SymOp delta = [bq, cap](const SymElement& x) {
    SymElement d = bq->apply_Delta(x);
    SymElement out;
    for (auto& [m, p] : d.terms)
      for (size_t j = 0; j < p.c.size(); ++j)
        if (static_cast<int>(j) + 1 <= cap) out.add(m, p.c[j], static_cast<int>(j) + 1);
    return out;
  };
  SymOp k = r.k;
  // A = sum_n (delta k)^n delta; terminates because delta raises the hbar power.
  SymOp A = [delta, k, cap](const SymElement& x) {
    SymElement term = delta(x);
    SymElement total;
    for (int n = 0; !term.zero(); ++n) {
      if (n > cap + 1) throw std::logic_error("perturbation series did not terminate");
      total.add(term);
      term = delta(k(term));
    }
    return total;
  };
  SymRetraction out = r;
  out.big = big_quantum;
  out.small = small_quantum;
  out.D_big = [bq](const SymElement& x) { return bq->apply(x); };
  SymOp i = r.i, p = r.p, dsmall = r.D_small;
  out.i = [i, k, A](const SymElement& y) {
    SymElement a = i(y);
    a.add(k(A(i(y))));
    return a;
  };
  out.p = [p, k, A](const SymElement& x) {
    SymElement a = p(x);
    a.add(p(A(k(x))));
    return a;
  };
  out.k = [k, A](const SymElement& x) {
    SymElement a = k(x);
    a.add(k(A(k(x))));
    return a;
  };
  out.D_small = [dsmall, p, i, A](const SymElement& y) {
    SymElement a = dsmall(y);
    a.add(p(A(i(y))));
    return a;
  };
  return out;
}

RetractionCheck check_sym_retraction(const SymRetraction& r, int maxSym) {
  RetractionCheck out;
  out.i_chain = out.p_chain = out.pi_id = out.homotopy = out.ki = out.pk = out.kk = true;
  for (const auto& m : r.small.alg.monomials(maxSym)) {
    SymElement y;
    y.add(m, Q(1));
    SymElement iy = r.i(y);
    if (!(r.D_big(iy) == r.i(r.D_small(y)))) out.i_chain = false;
    if (!(r.p(iy) == y)) out.pi_id = false;
    if (!r.k(iy).zero()) out.ki = false;
  }
  for (const auto& m : r.big.alg.monomials(maxSym)) {
    SymElement x;
    x.add(m, Q(1));
    if (!(r.D_small(r.p(x)) == r.p(r.D_big(x)))) out.p_chain = false;
    SymElement kx = r.k(x);
    SymElement lhs = r.i(r.p(x));
    lhs.add(x, Q(-1));
    SymElement rhs = r.D_big(kx);
    rhs.add(r.k(r.D_big(x)));
    if (!(lhs == rhs)) out.homotopy = false;
    if (!r.p(kx).zero()) out.pk = false;
    if (!r.k(kx).zero()) out.kk = false;
  }
  return out;
}

namespace {

std::map<int, int> collapse(const std::map<std::pair<int, int>, int>& by_key) {
  std::map<int, int> out;
  for (auto& [key, n] : by_key) out[key.first] += n;
  return prune(out);
}

void validate_bv_input(const GradedVectorSpace& W, const Mat& BW) {
  for (int k : W.deg)
    if (k != -1 && k != 0) throw std::invalid_argument("finite_bv_cohomology: W must sit in degrees -1 and 0");
  ShiftedPairing p{W, 1, 1, BW};
  if (!p.respects_degree() || !p.has_symmetry())
    throw std::invalid_argument("finite_bv_cohomology: pairing must be graded symmetric of degree +1");
  if (!p.nondegenerate()) throw std::invalid_argument("finite_bv_cohomology: degenerate pairing");
}

}  // namespace

std::map<int, int> finite_bv_bruteforce(const GradedVectorSpace& W, const Mat& BW, int maxSym) {
  validate_bv_input(W, BW);
  SymAlgebra A(W);
  return collapse(delta_cohomology(A, A.pair_table(BW), maxSym));
}

FiniteBVResult finite_bv_cohomology(const GradedVectorSpace& W, const Mat& BW) {
  validate_bv_input(W, BW);
  FiniteBVResult out;
  int n = W.size();
  DisjointSets ds(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (sgn(BW(a, b)) != 0) ds.unite(a, b);
  std::map<size_t, std::vector<int>> comps;
  for (int a = 0; a < n; ++a) comps[ds.find(a)].push_back(a);
  out.components = comps.size();
  std::map<int, int> total{{0, 1}};
  for (auto& [root, idx] : comps) {
    std::vector<int> deg;
    for (int a : idx) deg.push_back(W.deg[a]);
    GradedVectorSpace sub(deg);
    Mat b = submatrix(BW, idx, idx);
    int cap = static_cast<int>(idx.size()) + 2;
    std::map<int, int> h = finite_bv_bruteforce(sub, b, cap);
    // stabilization: two more Sym-degrees must not change the answer
    if (finite_bv_bruteforce(sub, b, cap + 2) != h) throw std::logic_error("finite_bv_cohomology: truncation did not stabilize");
    total = kunneth(total, h);
  }
  out.dims = prune(total);
  for (auto [k, d] : out.dims) out.rank += d;
  out.concentrated = out.dims.size() == 1;
  if (out.concentrated) out.degree = out.dims.begin()->first;
  int odd = 0;
  for (int k : W.deg)
    if (k == -1) ++odd;
  out.closed_degree = -odd;
  out.agrees = out.concentrated && out.rank == out.closed_rank && out.degree == out.closed_degree;
  return out;
}

}  // namespace bvb
