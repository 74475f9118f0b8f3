#pragma once

#include "bvb/algebras.hpp"
#include "bvb/factorization.hpp"

#include <map>

namespace bvb {

/// Weyl algebra of the topological-mechanics boundary data (V, omega, L).
WeylAlgebra topmech_weyl(const BoundaryData& bd);

/// Dimension of the word-length filtration piece F_k of the Weyl algebra (or of the
/// Fock module when fock = true), counted from distinct normal-ordered words.
int weyl_filtration_dim(const WeylAlgebra& W, int k, bool fock);
// Same count split by word degree.
std::map<int, int> weyl_filtration_graded(const WeylAlgebra& W, int k, bool fock);

struct TopmechReport {
  int dimV = 0, cells = 0, symCut = 0, hbarCut = 0;
  // filtration piece k -> total dimension, observables vs. algebra (times hbarCut + 1)
  std::map<int, int> open_dims, weyl_dims, half_dims, fock_dims;
  // k -> degree -> dimension
  std::map<int, std::map<int, int>> open_graded, weyl_graded, half_graded, fock_graded;
  // cohomology sits in degrees carried by the algebra (degree 0 when V is ungraded)
  bool open_concentrated = false, half_concentrated = false;
  bool commutator = false;   // m(O_v, O_w) - m(O_w, O_v) - hbar omega(v, w) is exact, all pairs
  int commutator_pairs = 0;
  bool projection = false;   // P m I = Sym(p_Lperp) classically
  bool fock_action = false;  // P^q m(I^q f, O_v) = f . v
  bool fock_module = false;  // P^q m(I^q f, O_v, O_w) = (f . v) . w
  bool pq_linear = false;    // P^q = P^cl on Sym^1
  bool structure_chain = false;
  bool pass() const;
};

/// Interval model of topological mechanics with V of dimension dimV (even) on N cells.
TopmechReport topmech_check(int dimV, int cells, int symCut, int hbarCut);
/// Same verification for arbitrary graded boundary data with zero differential.
TopmechReport topmech_check(const BoundaryData& bd, int cells, int symCut, int hbarCut);

}  // namespace bvb
