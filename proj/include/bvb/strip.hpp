#pragma once

#include "bvb/factorization.hpp"

#include <map>
#include <memory>

namespace bvb {

/// Strip [0, N] x (boundary circle) for the Poisson sigma model with Pi = 0:
/// the V-part is kept at v_0 and the V^[1]-part at v_N.
BulkBoundaryModel koszul_strip_model(int dimV, int N);

/// Perturbation of the strip differential by Pi, transported across the strip by the
/// reflection r(v_k) = v_{N-k}, r(e_k) = -e_{N+1-k}: delta(c (x) b) = (-1)^{|c|} r(c) (x) Q_Pi b.
Mat strip_pi_perturbation(const FieldComplex& strip, const Mat& Pi);

/// q(f, lambda) for f in Sym(V^) and lambda in Lambda(V): the bottom and top correspondence
/// inclusions, the strip structure map, then the quantum projection to Q[hbar].
class KoszulPairing {
 public:
  KoszulPairing(int dimV, int N, int symCut, int hbarCut);

  // f is a multiset of dual-basis indices, lambda an increasing list of basis indices.
  HPoly q(const std::vector<int>& f, const std::vector<int>& lambda) const;
  static HPoly aug_sym(const std::vector<int>& f) { return f.empty() ? HPoly(1) : HPoly(); }
  static HPoly aug_ext(const std::vector<int>& lambda) { return lambda.empty() ? HPoly(1) : HPoly(); }

  const SymComplex& strip_quantum() const;
  int dimV() const { return n_; }

 private:
  struct Impl;
  int n_;
  std::shared_ptr<Impl> impl_;
};

struct KoszulStripReport {
  int dimV = 0, N = 0, symCut = 0, hbarCut = 0;
  bool classical_acyclic = false;
  // Pi-perturbed strip: (d + delta)^2 = 0, acyclic, and the perturbed retraction identities.
  bool pi_square_zero = false, pi_acyclic = false, pi_retraction = false;
  bool quantum_checked = false;
  std::map<int, int> quantum_dims;  // expected {0: hbarCut + 1}
  bool restricts_sym = false, restricts_ext = false;
  int monomials_checked = 0;
  HPoly q_unit;
  std::map<std::pair<int, int>, HPoly> q_linear;  // q(nu_i, v_j)
  bool pass() const;
};

KoszulStripReport koszul_strip_check(int dimV, int N, const Mat& Pi, int symCut, int hbarCut, bool quantum_dims);

}  // namespace bvb
