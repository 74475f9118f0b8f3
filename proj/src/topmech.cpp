#include "bvb/topmech.hpp"

#include "bvb/models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bvb {

namespace {

SymElement unit() {
  SymElement x;
  x.add(Monomial{}, Q(1));
  return x;
}

SymElement gen(const SymAlgebra& A, int orig) {
  SymElement x;
  x.add(A.generator(orig), Q(1));
  return x;
}

// Generator of Sym(F[1]) for the field (cell, coordinate).
SymElement field_gen(const SymComplex& c, const FieldComplex& f, bool vertex, int id, int coord) {
  int pos = vertex ? f.cells.vertex_pos(id) : f.cells.edge_pos(id);
  int idx = f.index(pos, coord);
  if (idx < 0) throw std::logic_error("topmech: field not present");
  return gen(c.alg, idx);
}

// Fock word (letters are boundary coordinates in Lperp) as an element of Sym(Lperp)[hbar]/hbar^{cap+1}.
SymElement fock_to_sym(const SymAlgebra& A, const std::vector<int>& Mpos, const WordElement& f, int cap) {
  SymElement out;
  for (auto& [w, c] : f) {
    SymElement term = unit();
    for (int x : w) term = A.multiply(term, gen(A, Mpos[x]), static_cast<int>(w.size()), 0);
    for (int j = 0; j <= std::min(c.degree(), cap); ++j) out.add(term, c.at(j), j);
  }
  return out;
}

}  // namespace

WeylAlgebra topmech_weyl(const BoundaryData& bd) { return WeylAlgebra(bd.B.space, bd.omega, bd.inL); }

std::map<int, int> weyl_filtration_graded(const WeylAlgebra& W, int k, bool fock) {
  std::set<Word> seen;
  for (int d = 0; d <= k; ++d)
    for (auto& w : multisets(W.dim(), d)) {
      bool skip = false;
      for (int x : w)
        if (fock && W.in_L(x)) skip = true;
      if (skip) continue;
      for (auto& [u, c] : W.normal_order(w)) seen.insert(u);
    }
  std::map<int, int> out;
  for (const Word& w : seen) {
    int deg = 0;
    for (int x : w) deg += W.space().deg[x];
    ++out[deg];
  }
  return out;
}

int weyl_filtration_dim(const WeylAlgebra& W, int k, bool fock) {
  int total = 0;
  for (auto [d, n] : weyl_filtration_graded(W, k, fock)) total += n;
  return total;
}

bool TopmechReport::pass() const {
  return open_graded == weyl_graded && half_graded == fock_graded && open_concentrated && half_concentrated && commutator &&
         projection && fock_action && fock_module && pq_linear && structure_chain;
}

TopmechReport topmech_check(int dimV, int N, int symCut, int hbarCut) {
  if (dimV < 0 || dimV % 2 != 0) throw std::invalid_argument("topmech: dim V must be even");
  return topmech_check(topmech_boundary(dimV / 2), N, symCut, hbarCut);
}

TopmechReport topmech_check(const BoundaryData& bd, int N, int symCut, int hbarCut) {
  if (!lagrangian_check(bd).pass()) throw std::invalid_argument("topmech: boundary data is not Lagrangian");
  if (!is_zero(bd.B.d)) throw std::invalid_argument("topmech: boundary differential must vanish");
  const int dimV = bd.size();
  if (N < 3) throw std::invalid_argument("topmech: needs at least 3 cells");
  if (symCut < 2) throw std::invalid_argument("topmech: symCut must be at least 2");
  TopmechReport r;
  r.dimV = dimV;
  r.cells = N;
  r.symCut = symCut;
  r.hbarCut = hbarCut;
  BulkBoundaryModel model = half_line_model(bd, N);
  WeylAlgebra W = topmech_weyl(bd);
  std::vector<int> M = bd.Lperp();
  const int m = static_cast<int>(M.size());
  auto supported = [](const std::map<int, int>& h, const std::map<int, int>& support) {
    for (auto [d, n] : h)
      if (!support.count(d)) return false;
    return true;
  };

  // Open interval and half-closed interval: filtered dimensions.
  FieldComplex open = conditioned_fields(model, 0, N, "oo");
  FieldComplex half = conditioned_fields(model, 0, N, "co");
  SymComplex openQ = sym_observables(open.E, open.pairing, symCut, hbarCut);
  SymComplex halfQ = sym_observables(half.E, half.pairing, symCut, hbarCut);
  r.open_concentrated = r.half_concentrated = true;
  for (int k = 0; k <= symCut; ++k) {
    auto ho = sym_cohomology(openQ, k), hh = sym_cohomology(halfQ, k);
    auto wg = weyl_filtration_graded(W, k, false), fg = weyl_filtration_graded(W, k, true);
    for (auto& [d, n] : wg) n *= hbarCut + 1;
    for (auto& [d, n] : fg) n *= hbarCut + 1;
    r.open_concentrated = r.open_concentrated && supported(ho, wg);
    r.half_concentrated = r.half_concentrated && supported(hh, fg);
    r.open_graded[k] = ho;
    r.half_graded[k] = hh;
    r.weyl_graded[k] = wg;
    r.fock_graded[k] = fg;
    for (auto [d, n] : ho) r.open_dims[k] += n;
    for (auto [d, n] : hh) r.half_dims[k] += n;
    for (auto [d, n] : wg) r.weyl_dims[k] += n;
    for (auto [d, n] : fg) r.fock_dims[k] += n;
  }

  // Ordered product of two open intervals.
  int k = N / 2;
  StructureMap two = structure_map(model, {{0, k, "oo"}, {k, N, "oo"}}, {0, N, "oo"});
  FactorizationProduct prod(two, symCut, hbarCut, true);
  r.structure_chain = prod.check_chain_map(std::min(symCut, 2));
  r.commutator = true;
  for (int v = 0; v < dimV; ++v)
    for (int w = 0; w < dimV; ++w) {
      SymElement ov1 = field_gen(prod.source(0), two.sources[0], false, 1, v);
      SymElement ow1 = field_gen(prod.source(0), two.sources[0], false, 1, w);
      SymElement ov2 = field_gen(prod.source(1), two.sources[1], false, N, v);
      SymElement ow2 = field_gen(prod.source(1), two.sources[1], false, N, w);
      Q koszul = bd.B.space.deg[v] % 2 != 0 && bd.B.space.deg[w] % 2 != 0 ? Q(-1) : Q(1);
      SymElement c = prod.apply({ov1, ow2});
      c.add(prod.apply({ow1, ov2}), -koszul);
      c.add(Monomial{}, -bd.omega(v, w), 1);
      if (!is_coboundary(prod.target(), c)) r.commutator = false;
      ++r.commutator_pairs;
    }

  // Correspondence on [0, N): P m I = Sym(p_Lperp), classically.
  std::vector<Q> phi(N + 1, Q(0));
  phi[1] = 1;
  Correspondence whole = correspondence_maps(model, N, phi);
  StructureMap inner = structure_map(model, {{1, N, "oo"}}, {0, N, "co"});
  FactorizationProduct cl(inner, symCut, 0, false);
  SymComplex smallCl = sym_observables(whole.r.small, Mat(), symCut, 0);
  GenMap gp = cl.target().alg.genmap(whole.r.p, smallCl.alg, 0);
  r.projection = true;
  for (auto& mono : multisets(dimV, symCut)) {
    for (size_t len = 0; len <= mono.size(); ++len) {
      Word w(mono.begin(), mono.begin() + len);
      SymElement x = unit();
      for (int v : w) x = cl.source(0).alg.multiply(x, field_gen(cl.source(0), inner.sources[0], false, N, v), symCut, 0);
      SymElement y = cl.push(0, x);
      LinComb out;
      for (auto& [mm, p] : y.terms) apply_algebra_map(cl.target().alg, smallCl.alg, gp, mm, p.at(0), out);
      SymElement got;
      got.add(out);
      SymElement expect = unit();
      for (int v : w) {
        auto it = std::find(M.begin(), M.end(), v);
        if (it == M.end()) {
          expect = SymElement{};
          break;
        }
        expect = smallCl.alg.multiply(expect, gen(smallCl.alg, static_cast<int>(it - M.begin())), symCut, 0);
      }
      if (!(got == expect)) r.projection = false;
    }
  }

  // Quantum projection on [0, N) and quantum inclusion on [0, 1).
  SymRetraction symWhole = sym_retraction(whole.r, symCut, 1);
  SymComplex smallQ = twisted_envelope(decompose(bd).Lperp, decompose(bd).mu, symCut, hbarCut);
  SymComplex bigQ = sym_observables(whole.fields.E, whole.fields.pairing, symCut, hbarCut);
  SymRetraction qWhole = perturb_quantum(symWhole, bigQ, smallQ);
  Correspondence left = correspondence_maps(model, 1, phi);
  SymRetraction symLeft = sym_retraction(left.r, symCut, 1);
  SymComplex leftQ = sym_observables(left.fields.E, left.fields.pairing, symCut, hbarCut);
  SymRetraction qLeft = perturb_quantum(symLeft, leftQ, smallQ);

  r.pq_linear = true;
  for (const auto& mono : bigQ.alg.monomials(1)) {
    SymElement x;
    x.add(mono, Q(1));
    if (!(qWhole.p(x) == symWhole.p(x))) r.pq_linear = false;
  }

  std::vector<int> Mpos(bd.size(), -1);
  for (size_t l = 0; l < M.size(); ++l) Mpos[M[l]] = static_cast<int>(l);

  StructureMap act1 = structure_map(model, {{0, 1, "co"}, {1, N, "oo"}}, {0, N, "co"});
  FactorizationProduct a1(act1, symCut, hbarCut, true);
  StructureMap act2 = structure_map(model, {{0, 1, "co"}, {1, 2, "oo"}, {2, N, "oo"}}, {0, N, "co"});
  FactorizationProduct a2(act2, symCut, hbarCut, true);
  r.fock_action = r.fock_module = true;
  for (int d = 0; d <= symCut - 1; ++d)
    for (auto& fw : multisets(m, d)) {
      Word letters;
      for (int x : fw) letters.push_back(M[x]);
      WordElement f = W.normal_order(letters);
      if (f.empty()) continue;
      SymElement fs = fock_to_sym(smallQ.alg, Mpos, f, hbarCut);
      SymElement If = qLeft.i(fs);
      for (int v = 0; v < dimV; ++v) {
        SymElement ov = field_gen(a1.source(1), act1.sources[1], false, N, v);
        SymElement got = qWhole.p(a1.apply({If, ov}));
        SymElement expect = fock_to_sym(smallQ.alg, Mpos, W.fock_action(f, W.generator(v)), hbarCut);
        if (!(got == expect)) r.fock_action = false;
        if (d + 2 > symCut) continue;
        for (int w = 0; w < dimV; ++w) {
          SymElement ov1 = field_gen(a2.source(1), act2.sources[1], false, 2, v);
          SymElement ow2 = field_gen(a2.source(2), act2.sources[2], false, N, w);
          SymElement got2 = qWhole.p(a2.apply({If, ov1, ow2}));
          SymElement expect2 =
              fock_to_sym(smallQ.alg, Mpos, W.fock_action(W.fock_action(f, W.generator(v)), W.generator(w)), hbarCut);
          if (!(got2 == expect2)) r.fock_module = false;
        }
      }
    }
  return r;
}

}  // namespace bvb
