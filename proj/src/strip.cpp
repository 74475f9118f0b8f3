#include "bvb/strip.hpp"

#include "bvb/algebras.hpp"
#include "bvb/models.hpp"

#include <stdexcept>

namespace bvb {

BulkBoundaryModel koszul_strip_model(int dimV, int N) {
  if (N < 2) throw std::invalid_argument("koszul strip: needs at least 2 cells");
  BulkBoundaryModel m;
  m.bd = psm_boundary(zeros(dimV, dimV));
  m.N = N;
  m.conditions[0] = m.bd.inL;
  std::vector<bool> other(m.bd.inL.size());
  for (size_t j = 0; j < other.size(); ++j) other[j] = !m.bd.inL[j];
  m.conditions[N] = other;
  return m;
}

Mat strip_pi_perturbation(const FieldComplex& strip, const Mat& Pi) {
  const CellularInterval& cells = strip.cells;
  if (cells.a != 0 || cells.b != cells.N || cells.kind() != "cc") throw std::invalid_argument("strip_pi_perturbation: needs [0, N] closed");
  Mat QPi = psm_boundary(Pi).B.d;
  const int N = cells.N;
  Mat delta = zeros(strip.size(), strip.size());
  for (int i = 0; i < strip.size(); ++i) {
    auto [pos, j] = strip.basis[i];
    bool vertex = pos < static_cast<int>(cells.vertices.size());
    int id = vertex ? cells.vertices[pos] : cells.edges[pos - cells.vertices.size()];
    int tpos = vertex ? cells.vertex_pos(N - id) : cells.edge_pos(N + 1 - id);
    // (-1)^{|c|} times the reflection sign -1 of edges
    int sign = 1;
    for (int t = 0; t < QPi.rows(); ++t) {
      if (sgn(QPi(t, j)) == 0) continue;
      int k = strip.index(tpos, t);
      if (k < 0) throw std::logic_error("strip_pi_perturbation: leaves the conditioned fields");
      delta(k, i) += sign * QPi(t, j);
    }
  }
  return delta;
}

struct KoszulPairing::Impl {
  BulkBoundaryModel model;
  std::unique_ptr<FactorizationProduct> prod;
  SymRetraction bottom, top, global;
  SymComplex smallB, smallT;
  std::vector<int> nu, v;  // generator indices in the small algebras
};

KoszulPairing::KoszulPairing(int dimV, int N, int symCut, int hbarCut) : n_(dimV), impl_(std::make_shared<Impl>()) {
  if (dimV == 0) return;
  Impl& s = *impl_;
  s.model = koszul_strip_model(dimV, N);
  const BoundaryData& bd = s.model.bd;

  FieldComplex strip = conditioned_fields(s.model, 0, N, "cc");
  SymRetraction cl = sym_retraction(standard_retraction(strip.E), symCut, 1);
  SymComplex stripQ = sym_observables(strip.E, strip.pairing, symCut, hbarCut);
  s.global = perturb_quantum(cl, stripQ, cl.small);

  std::vector<Q> phiB(N + 1, Q(0)), phiT(N + 1, Q(0));
  phiB[1] = 1;
  phiT[N] = 1;
  BulkBoundaryModel mb;
  mb.bd = bd;
  mb.N = N;
  mb.conditions[0] = s.model.conditions.at(0);
  Correspondence cb = correspondence_maps(mb, 1, phiB);
  BulkBoundaryModel mt;
  mt.bd = bd;
  mt.bd.inL = s.model.conditions.at(N);
  mt.N = N;
  mt.conditions[N] = mt.bd.inL;
  Correspondence ct = correspondence_maps_right(mt, N - 1, phiT);

  Decomposition db = decompose(mb.bd), dt = decompose(mt.bd);
  s.smallB = twisted_envelope(db.Lperp, db.mu, symCut, hbarCut);
  s.smallT = twisted_envelope(dt.Lperp, dt.mu, symCut, hbarCut);
  s.bottom = perturb_quantum(sym_retraction(cb.r, symCut, 1), sym_observables(cb.fields.E, cb.fields.pairing, symCut, hbarCut), s.smallB);
  s.top = perturb_quantum(sym_retraction(ct.r, symCut, 1), sym_observables(ct.fields.E, ct.fields.pairing, symCut, hbarCut), s.smallT);

  StructureMap sm = structure_map(s.model, {{0, 1, "co"}, {N - 1, N, "oc"}}, {0, N, "cc"});
  s.prod = std::make_unique<FactorizationProduct>(sm, symCut, hbarCut, true);

  // Circle edge (cell 1) components: xi_i for Sym(V^), x_j for Lambda(V).
  const int nx = 2 * dimV;
  std::vector<int> MB = mb.bd.Lperp(), MT = mt.bd.Lperp();
  for (int i = 0; i < dimV; ++i) {
    s.nu.push_back(static_cast<int>(std::find(MB.begin(), MB.end(), nx + dimV + i) - MB.begin()));
    s.v.push_back(static_cast<int>(std::find(MT.begin(), MT.end(), nx + i) - MT.begin()));
  }
}

const SymComplex& KoszulPairing::strip_quantum() const { return impl_->global.big; }

HPoly KoszulPairing::q(const std::vector<int>& f, const std::vector<int>& lambda) const {
  if (n_ == 0) {
    if (!f.empty() || !lambda.empty()) throw std::invalid_argument("koszul_pairing: dim V = 0");
    return HPoly(1);
  }
  const Impl& s = *impl_;
  auto word = [](const SymComplex& c, const std::vector<int>& gens, const std::vector<int>& idx) {
    SymElement x;
    x.add(Monomial{}, Q(1));
    for (int i : idx) {
      SymElement g;
      g.add(c.alg.generator(gens[i]), Q(1));
      x = c.alg.multiply(x, g, c.symCut, c.hbarCut);
    }
    return x;
  };
  SymElement xb = s.bottom.i(word(s.smallB, s.nu, f));
  SymElement xt = s.top.i(word(s.smallT, s.v, lambda));
  SymElement y = s.global.p(s.prod->apply({xb, xt}));
  auto it = y.terms.find(Monomial{});
  return it == y.terms.end() ? HPoly() : it->second;
}

bool KoszulStripReport::pass() const {
  bool q = restricts_sym && restricts_ext && q_unit == HPoly(1);
  bool quantum = !quantum_checked || quantum_dims == std::map<int, int>{{0, hbarCut + 1}};
  return classical_acyclic && pi_square_zero && pi_acyclic && pi_retraction && quantum && q;
}

KoszulStripReport koszul_strip_check(int dimV, int N, const Mat& Pi, int symCut, int hbarCut, bool quantum_dims) {
  KoszulStripReport r;
  r.dimV = dimV;
  r.N = N;
  r.symCut = symCut;
  r.hbarCut = hbarCut;
  if (dimV == 0) {
    r.classical_acyclic = r.pi_square_zero = r.pi_acyclic = r.pi_retraction = true;
    r.quantum_checked = quantum_dims;
    if (quantum_dims) r.quantum_dims = {{0, hbarCut + 1}};
    r.restricts_sym = r.restricts_ext = true;
    r.q_unit = HPoly(1);
    return r;
  }
  BulkBoundaryModel m = koszul_strip_model(dimV, N);
  FieldComplex strip = conditioned_fields(m, 0, N, "cc");
  r.classical_acyclic = cohomology_dims(strip.E).empty();
  Mat delta = strip_pi_perturbation(strip, Pi);
  Mat dp = strip.E.d + delta;
  r.pi_square_zero = is_zero(Mat(dp * dp));
  if (r.pi_square_zero) {
    CochainComplex perturbed(strip.E.space, dp);
    r.pi_acyclic = cohomology_dims(perturbed).empty();
    DeformationRetraction h = hpl(standard_retraction(strip.E), delta);
    r.pi_retraction = check_retraction(h).identities() && h.small.size() == 0;
  }

  KoszulPairing kp(dimV, N, symCut, hbarCut);
  if (quantum_dims) {
    r.quantum_checked = true;
    r.quantum_dims = sym_cohomology(kp.strip_quantum());
  }
  r.q_unit = kp.q({}, {});
  r.restricts_sym = r.restricts_ext = true;
  for (int d = 0; d <= std::min(3, symCut); ++d) {
    for (auto& f : multisets(dimV, d)) {
      if (!(kp.q(f, {}) == KoszulPairing::aug_sym(f))) r.restricts_sym = false;
      ++r.monomials_checked;
    }
    for (auto& l : subsets(dimV, d)) {
      if (!(kp.q({}, l) == KoszulPairing::aug_ext(l))) r.restricts_ext = false;
      ++r.monomials_checked;
    }
  }
  if (symCut >= 2)
    for (int i = 0; i < dimV; ++i)
      for (int j = 0; j < dimV; ++j) r.q_linear[{i, j}] = kp.q({i}, {j});
  return r;
}

}  // namespace bvb
