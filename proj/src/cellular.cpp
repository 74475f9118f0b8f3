#include "bvb/cellular.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvb {

CellularInterval cellular_region(int N, int a, int b, const std::string& kind) {
  if (N < 1) throw std::invalid_argument("cellular_region: N must be positive");
  if (kind.size() != 2 || (kind[0] != 'c' && kind[0] != 'o') || (kind[1] != 'c' && kind[1] != 'o'))
    throw std::invalid_argument("cellular_region: kind must be co, oc, oo or cc");
  if (a < 0 || b > N || a >= b) throw std::invalid_argument("cellular_region: empty or out-of-range region");
  CellularInterval c;
  c.N = N;
  c.a = a;
  c.b = b;
  c.closed_left = kind[0] == 'c';
  c.closed_right = kind[1] == 'c';
  for (int v = a; v <= b; ++v) {
    if (v == a && !c.closed_left) continue;
    if (v == b && !c.closed_right) continue;
    c.vertices.push_back(v);
  }
  for (int e = a + 1; e <= b; ++e) c.edges.push_back(e);
  return c;
}

int CellularInterval::vertex_pos(int v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int CellularInterval::edge_pos(int e) const {
  auto it = std::find(edges.begin(), edges.end(), e);
  return it == edges.end() ? -1 : static_cast<int>(vertices.size() + (it - edges.begin()));
}

bool CellularInterval::contains_cell(bool is_vertex, int id) const {
  return is_vertex ? vertex_pos(id) >= 0 : edge_pos(id) >= 0;
}

std::string CellularInterval::kind() const {
  return std::string(1, closed_left ? 'c' : 'o') + std::string(1, closed_right ? 'c' : 'o');
}

CochainComplex CellularInterval::complex() const {
  std::vector<int> deg;
  std::vector<std::string> lab;
  for (int v : vertices) {
    deg.push_back(0);
    lab.push_back("v" + std::to_string(v));
  }
  for (int e : edges) {
    deg.push_back(1);
    lab.push_back("e" + std::to_string(e));
  }
  Mat d = zeros(size(), size());
  for (int e : edges) {
    int r = edge_pos(e);
    int hi = vertex_pos(e), lo = vertex_pos(e - 1);
    if (hi >= 0) d(r, hi) = 1;
    if (lo >= 0) d(r, lo) = -1;
  }
  return CochainComplex(GradedVectorSpace(deg, lab), d);
}

ShiftedPairing CellularInterval::whitney() const {
  ShiftedPairing p;
  p.space = complex().space;
  p.degree = -1;
  p.eps = 1;
  p.B = zeros(size(), size());
  Q half(1, 2);
  for (int e : edges) {
    int r = edge_pos(e);
    for (int v : {e - 1, e}) {
      int c = vertex_pos(v);
      if (c < 0) continue;
      p.B(r, c) = half;
      p.B(c, r) = half;
    }
  }
  return p;
}

CochainComplex cellular_de_rham(int N, int a, int b, const std::string& kind) {
  return cellular_region(N, a, b, kind).complex();
}

std::vector<Q> primitive(const std::vector<Q>& phi_by_edge, int N) {
  std::vector<Q> out(N + 1, Q(0));
  for (int k = 1; k <= N; ++k) out[k] = out[k - 1] + phi_by_edge[k];
  return out;
}

}  // namespace bvb
