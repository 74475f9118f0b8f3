#include "bvb/bulk.hpp"

#include <stdexcept>

namespace bvb {

std::vector<int> BoundaryData::L() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (inL[j]) out.push_back(j);
  return out;
}

std::vector<int> BoundaryData::Lperp() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (!inL[j]) out.push_back(j);
  return out;
}

namespace {

int column_degree(const GradedVectorSpace& s, const Mat& m, long c) {
  int deg = 0;
  bool seen = false;
  for (int r = 0; r < s.size(); ++r) {
    if (sgn(m(r, c)) == 0) continue;
    if (seen && s.deg[r] != deg) throw std::invalid_argument("adapt_boundary: basis vector is not homogeneous");
    deg = s.deg[r];
    seen = true;
  }
  if (!seen) throw std::invalid_argument("adapt_boundary: zero basis vector");
  return deg;
}

// Cell at a flat position of an interval: (is_vertex, id).
std::pair<bool, int> cell_at(const CellularInterval& c, int pos) {
  int nv = static_cast<int>(c.vertices.size());
  if (pos < nv) return {true, c.vertices[pos]};
  return {false, c.edges[pos - nv]};
}

}  // namespace

BoundaryData adapt_boundary(const CochainComplex& B, const Mat& omega, const Mat& Lcols, const Mat& Lperp_cols) {
  Mat T = hcat(Lcols, Lperp_cols);
  if (T.rows() != B.size() || T.cols() != B.size()) throw std::invalid_argument("adapt_boundary: wrong number of basis vectors");
  if (rank(T) != B.size()) throw std::invalid_argument("adapt_boundary: columns are not a basis");
  std::vector<int> deg;
  std::vector<std::string> lab;
  for (long c = 0; c < T.cols(); ++c) {
    deg.push_back(column_degree(B.space, T, c));
    lab.push_back((c < Lcols.cols() ? "l" : "m") + std::to_string(c < Lcols.cols() ? c : c - Lcols.cols()));
  }
  Mat Ti = inverse(T);
  BoundaryData out;
  out.B = CochainComplex(GradedVectorSpace(deg, lab), Ti * B.d * T);
  out.omega = Mat(T.transpose()) * omega * T;
  out.inL.assign(B.size(), false);
  for (long c = 0; c < Lcols.cols(); ++c) out.inL[c] = true;
  return out;
}

LagrangianCheck lagrangian_check(const BoundaryData& bd) {
  LagrangianCheck out;
  auto L = bd.L(), M = bd.Lperp();
  out.nondegenerate = rank(bd.omega) == bd.size();
  out.half_rank = 2 * static_cast<int>(L.size()) == bd.size();
  out.isotropic = is_zero(submatrix(bd.omega, L, L));
  out.closed = M.empty() || L.empty() || is_zero(submatrix(bd.B.d, M, L));
  return out;
}

Decomposition decompose(const BoundaryData& bd) {
  auto L = bd.L(), M = bd.Lperp();
  auto sub_space = [&](const std::vector<int>& idx) {
    std::vector<int> deg;
    std::vector<std::string> lab;
    for (int j : idx) {
      deg.push_back(bd.B.space.deg[j]);
      lab.push_back(bd.B.space.label[j]);
    }
    return GradedVectorSpace(deg, lab);
  };
  Decomposition out;
  out.L = CochainComplex(sub_space(L), submatrix(bd.B.d, L, L));
  out.Lperp = CochainComplex(sub_space(M), submatrix(bd.B.d, M, M));
  out.Q_rel = submatrix(bd.B.d, L, M);
  out.Q_L_to_Lperp = submatrix(bd.B.d, M, L);
  out.mu = submatrix(bd.omega, M, L) * out.Q_rel;
  return out;
}

BulkBoundaryModel half_line_model(const BoundaryData& bd, int N) {
  BulkBoundaryModel m;
  m.bd = bd;
  m.N = N;
  m.conditions[0] = bd.inL;
  return m;
}

int FieldComplex::index(int cell_pos, int coord) const {
  for (int i = 0; i < size(); ++i)
    if (basis[i].first == cell_pos && basis[i].second == coord) return i;
  return -1;
}

FieldComplex bulk_fields(const BulkBoundaryModel& m, int a, int b, const std::string& kind) {
  FieldComplex f;
  f.cells = cellular_region(m.N, a, b, kind);
  CochainComplex C = f.cells.complex();
  ShiftedPairing W = f.cells.whitney();
  const int nb = m.bd.size();
  f.E = tensor(C, m.bd.B);
  f.pairing = zeros(f.E.size(), f.E.size());
  for (int c1 = 0; c1 < C.size(); ++c1)
    for (int c2 = 0; c2 < C.size(); ++c2) {
      if (sgn(W.B(c1, c2)) == 0) continue;
      for (int j1 = 0; j1 < nb; ++j1)
        for (int j2 = 0; j2 < nb; ++j2) {
          if (sgn(m.bd.omega(j1, j2)) == 0) continue;
          long s = static_cast<long>(m.bd.B.space.deg[j1]) * C.space.deg[c2];
          f.pairing(c1 * nb + j1, c2 * nb + j2) = -sign_pow(s) * W.B(c1, c2) * m.bd.omega(j1, j2);
        }
    }
  for (int c = 0; c < C.size(); ++c)
    for (int j = 0; j < nb; ++j) f.basis.emplace_back(c, j);
  return f;
}

FieldComplex conditioned_fields(const BulkBoundaryModel& m, int a, int b, const std::string& kind) {
  FieldComplex full = bulk_fields(m, a, b, kind);
  std::vector<int> keep;
  for (int i = 0; i < full.size(); ++i) {
    auto [pos, j] = full.basis[i];
    auto [is_vertex, id] = cell_at(full.cells, pos);
    auto it = m.conditions.find(id);
    if (is_vertex && it != m.conditions.end() && !it->second[j]) continue;
    keep.push_back(i);
  }
  std::vector<int> drop;
  for (int i = 0, k = 0; i < full.size(); ++i) {
    if (k < static_cast<int>(keep.size()) && keep[k] == i) ++k;
    else drop.push_back(i);
  }
  if (!drop.empty() && !is_zero(submatrix(full.E.d, drop, keep)))
    throw std::invalid_argument("conditioned_fields: boundary condition is not a subcomplex");
  FieldComplex f;
  f.cells = full.cells;
  std::vector<int> deg;
  std::vector<std::string> lab;
  for (int i : keep) {
    deg.push_back(full.E.space.deg[i]);
    lab.push_back(full.E.space.label[i]);
    f.basis.push_back(full.basis[i]);
  }
  f.E = CochainComplex(GradedVectorSpace(deg, lab), submatrix(full.E.d, keep, keep));
  f.pairing = submatrix(full.pairing, keep, keep);
  return f;
}

Mat restriction(const FieldComplex& f, int v) {
  int pos = f.cells.vertex_pos(v);
  if (pos < 0) throw std::invalid_argument("restriction: vertex not in region");
  int nb = 0;
  for (auto& [c, j] : f.basis) nb = std::max(nb, j + 1);
  Mat r = zeros(nb, f.size());
  for (int i = 0; i < f.size(); ++i)
    if (f.basis[i].first == pos) r(f.basis[i].second, i) = 1;
  return r;
}

Mat telescoping_form(const FieldComplex& f, const BoundaryData& bd) {
  Mat out = zeros(f.size(), f.size());
  auto term = [&](int v, int sign) {
    if (f.cells.vertex_pos(v) < 0) return;
    Mat r = restriction(f, v);
    Mat rr = zeros(bd.size(), f.size());
    rr.topRows(r.rows()) = r;
    out += Q(sign) * mul(Mat(rr.transpose()), mul(bd.omega, rr));
  };
  term(f.cells.a, 1);
  term(f.cells.b, -1);
  return out;
}

Mat extension(const FieldComplex& from, const FieldComplex& to) {
  Mat e = zeros(to.size(), from.size());
  for (int i = 0; i < from.size(); ++i) {
    auto [pos, j] = from.basis[i];
    auto [is_vertex, id] = cell_at(from.cells, pos);
    int tpos = is_vertex ? to.cells.vertex_pos(id) : to.cells.edge_pos(id);
    int t = tpos < 0 ? -1 : to.index(tpos, j);
    if (t < 0) throw std::invalid_argument("extension: source cell not contained in target");
    e(t, i) = 1;
  }
  return e;
}

namespace {

// Left end: region [0, b) with the condition at v_0. Right end: region (b, N] with
// the condition at v_N. Psi is the primitive of phi vanishing at the open end.
Correspondence correspondence_impl(const BulkBoundaryModel& m, int b, const std::vector<Q>& phi, bool right) {
  if (static_cast<int>(phi.size()) != m.N + 1) throw std::invalid_argument("correspondence_maps: phi needs N + 1 entries");
  Q total = 0;
  for (int e = 1; e <= m.N; ++e) {
    bool outside = right ? e <= b : e > b;
    if (outside && sgn(phi[e]) != 0) throw std::invalid_argument("correspondence_maps: phi supported outside the region");
    total += phi[e];
  }
  if (total != 1) throw std::invalid_argument("correspondence_maps: phi must have total weight 1");
  Decomposition dec = decompose(m.bd);
  if (!is_zero(dec.Q_L_to_Lperp)) throw std::invalid_argument("correspondence_maps: L is not a subcomplex");
  std::vector<int> L = m.bd.L(), M = m.bd.Lperp();
  const int nb = m.bd.size();
  std::vector<Q> Phi = primitive(phi, m.N);
  std::vector<Q> Psi = Phi;
  if (!right)
    for (Q& x : Psi) x -= 1;
  const int lo = right ? b : 0, hi = right ? m.N : b;
  const std::string kind = right ? "oc" : "co";

  BulkBoundaryModel free = m;
  free.conditions.clear();
  FieldComplex full = bulk_fields(free, lo, hi, kind);
  Correspondence out;
  out.fields = conditioned_fields(m, lo, hi, kind);
  out.phi = phi;
  out.mu = dec.mu;
  out.inL = m.bd.inL;
  out.boundary_vertex = right ? m.N : 0;
  const CellularInterval& cells = full.cells;
  const int n = full.size();
  const int s = static_cast<int>(M.size());

  Mat I = zeros(n, s), P = zeros(s, n), K = zeros(n, n);
  for (int l = 0; l < s; ++l) {
    int j = M[l];
    for (int e : cells.edges) I(cells.edge_pos(e) * nb + j, l) += phi[e];
    for (size_t r = 0; r < L.size(); ++r) {
      Q q = dec.Q_rel(r, l);
      if (sgn(q) == 0) continue;
      for (int v : cells.vertices) I(cells.vertex_pos(v) * nb + L[r], l) += Psi[v] * q;
    }
  }
  std::vector<int> lpos(nb, -1);
  for (int l = 0; l < s; ++l) lpos[M[l]] = l;
  for (int e : cells.edges)
    for (int j = 0; j < nb; ++j) {
      int col = cells.edge_pos(e) * nb + j;
      if (lpos[j] >= 0) {
        P(lpos[j], col) = 1;
        for (int v : cells.vertices) K(cells.vertex_pos(v) * nb + j, col) += Psi[v];
      }
      for (int v : cells.vertices) {
        if (!right && v < e) K(cells.vertex_pos(v) * nb + j, col) += 1;
        if (right && v >= e) K(cells.vertex_pos(v) * nb + j, col) -= 1;
      }
    }
  // Restrict to the conditioned subcomplex; the dropped coordinates must carry nothing.
  std::vector<int> keep, drop;
  for (int i = 0; i < n; ++i) {
    auto [pos, j] = full.basis[i];
    (out.fields.index(pos, j) >= 0 ? keep : drop).push_back(i);
  }
  std::vector<int> all_small(s), all_big = keep;
  for (int l = 0; l < s; ++l) all_small[l] = l;
  if (!drop.empty()) {
    if (!is_zero(submatrix(I, drop, all_small)) || !is_zero(submatrix(K, drop, keep)))
      throw std::logic_error("correspondence_maps: maps leave the conditioned fields");
  }
  out.r.big = out.fields.E;
  out.r.small = shift(dec.Lperp, -1);
  out.r.i = submatrix(I, keep, all_small);
  out.r.p = submatrix(P, all_small, keep);
  out.r.k = submatrix(K, keep, keep);
  return out;
}

}  // namespace

Correspondence correspondence_maps(const BulkBoundaryModel& m, int b, const std::vector<Q>& phi) {
  return correspondence_impl(m, b, phi, false);
}

Correspondence correspondence_maps_right(const BulkBoundaryModel& m, int a, const std::vector<Q>& phi) {
  return correspondence_impl(m, a, phi, true);
}

CorrespondenceCheck check_correspondence(const Correspondence& c) {
  CorrespondenceCheck out;
  out.retraction = check_retraction(c.r);
  Mat img = restriction(c.fields, c.boundary_vertex) * c.r.i;
  out.boundary_in_L = true;
  for (long j = 0; j < img.rows(); ++j)
    if (!c.inL[j] && !is_zero(Mat(img.row(j)))) out.boundary_in_L = false;
  return out;
}

CocycleCheck quantum_cocycle_check(const Correspondence& c, bool reversed_orientation) {
  CocycleCheck out;
  const CellularInterval& cells = c.fields.cells;
  std::vector<Q> Phi = primitive(c.phi, cells.N);
  ShiftedPairing W = cells.whitney();
  Q integral = 0;
  for (int e : cells.edges)
    for (int v : cells.vertices) {
      Q psi = c.boundary_vertex == 0 ? Phi[v] - 1 : Phi[v];
      integral += c.phi[e] * W.B(cells.edge_pos(e), cells.vertex_pos(v)) * psi;
    }
  Mat pairing = c.fields.pairing;
  if (reversed_orientation) {
    integral = -integral;
    pairing = -pairing;
  }
  out.discrete_integral = integral;
  out.pulled_back = Mat(c.r.i.transpose()) * pairing * c.r.i;
  // the far end carries the opposite induced orientation
  Mat expect = c.boundary_vertex == 0 ? c.mu : Mat(-c.mu);
  if (reversed_orientation) expect = -expect;
  out.defect = out.pulled_back - expect;
  out.holds = is_zero(out.defect);
  out.matches_integral = equal(out.pulled_back, Mat(Q(-2) * integral * c.mu));
  return out;
}

}  // namespace bvb
