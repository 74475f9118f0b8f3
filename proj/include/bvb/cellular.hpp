#pragma once

#include "bvb/graded.hpp"

#include <string>

namespace bvb {

/// Cellular model of an interval region inside [0, N]. Vertices v_0..v_N,
/// edges e_1..e_N with e_i = [v_{i-1}, v_i]. A closed end keeps its vertex,
/// an open end drops it (compact support).
struct CellularInterval {
  int N = 1;
  int a = 0, b = 1;
  bool closed_left = false, closed_right = false;
  std::vector<int> vertices;  // retained vertex ids, increasing
  std::vector<int> edges;     // retained edge ids, increasing

  int size() const { return static_cast<int>(vertices.size() + edges.size()); }
  // Flat position of a vertex / edge, -1 if not retained. Vertices come first.
  int vertex_pos(int v) const;
  int edge_pos(int e) const;
  std::string kind() const;
  CochainComplex complex() const;
  // Whitney pairing: 1/2 for each incident vertex-edge pair, graded symmetric of degree -1.
  ShiftedPairing whitney() const;
  bool contains_cell(bool is_vertex, int id) const;
};

// kind is one of "co", "oc", "oo", "cc".
CellularInterval cellular_region(int N, int a, int b, const std::string& kind);
CochainComplex cellular_de_rham(int N, int a, int b, const std::string& kind);

// Discrete primitive Phi(v_k) = sum_{i <= k} phi(e_i) of an edge cochain indexed by edge id.
std::vector<Q> primitive(const std::vector<Q>& phi_by_edge, int N);

}  // namespace bvb
