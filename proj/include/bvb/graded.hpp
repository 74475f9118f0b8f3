#pragma once

#include "bvb/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace bvb {

/// Finite graded space with a flat basis. Basis vectors may appear in any
/// degree order; per-degree blocks are extracted by index lists.
struct GradedVectorSpace {
  std::vector<int> deg;
  std::vector<std::string> label;

  GradedVectorSpace() = default;
  GradedVectorSpace(std::vector<int> degrees, std::vector<std::string> labels = {});
  static GradedVectorSpace from_dims(const std::map<int, int>& dims, const std::string& prefix = "e");

  int size() const { return static_cast<int>(deg.size()); }
  std::map<int, int> dims() const;
  std::vector<int> indices(int k) const;
  // diag((-1)^deg)
  Mat sign_matrix() const;
};

/// Cochain complex stored as one flat square matrix of degree +1.
struct CochainComplex {
  GradedVectorSpace space;
  Mat d;

  CochainComplex() = default;
  CochainComplex(GradedVectorSpace s, Mat diff);
  int size() const { return space.size(); }
  Mat d_at(int k) const;  // block degree k -> k+1
  bool square_zero() const;
  bool respects_degree() const;
};

/// Linear map raising degree by `shift`, as a flat target x source matrix.
struct GradedMap {
  GradedVectorSpace source, target;
  int shift = 0;
  Mat m;
  Mat at(int k) const;  // block degree k -> k + shift
  bool respects_degree() const;
};
using ChainMap = GradedMap;

bool is_chain_map(const CochainComplex& src, const CochainComplex& dst, const GradedMap& f);

/// Graded bilinear form of degree p: B(a,b) != 0 only if |a| + |b| + p = 0.
/// eps = +1 for graded symmetric, -1 for graded antisymmetric, 0 for undeclared.
struct ShiftedPairing {
  GradedVectorSpace space;
  int degree = 0;
  int eps = 0;
  Mat B;

  bool respects_degree() const;
  bool has_symmetry() const;
  bool nondegenerate() const;
  Q operator()(int a, int b) const { return B(a, b); }
};

struct Cohomology {
  std::map<int, int> dims;
  std::map<int, Mat> reps;  // columns are flat vectors of the complex
  int total() const;
};

Cohomology cohomology(const CochainComplex& c);
std::map<int, int> cohomology_dims(const CochainComplex& c);
std::map<int, int> kunneth(const std::map<int, int>& a, const std::map<int, int>& b);
std::map<int, int> prune(std::map<int, int> dims);

CochainComplex tensor(const CochainComplex& a, const CochainComplex& b);
CochainComplex shift(const CochainComplex& c, int k);
CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b);
// Koszul dual: (d f)(x) = -(-1)^{|f|} f(dx).
CochainComplex dual(const CochainComplex& c);
// Evaluation map C -> C** under the Koszul rule; diagonal of signs.
ChainMap double_dual_map(const CochainComplex& c);

// D(e1,e2) = B(Qe1,e2) + (-1)^{|e1|} B(e1,Qe2)
Mat pairing_invariance_defect(const CochainComplex& c, const Mat& B);

/// Retraction data with i p - 1 = d k + k d.
struct DeformationRetraction {
  CochainComplex big, small;
  Mat i, p, k;
};

struct RetractionCheck {
  bool i_chain = false, p_chain = false, pi_id = false, homotopy = false;
  bool ki = false, pk = false, kk = false;
  bool identities() const { return i_chain && p_chain && pi_id && homotopy; }
  bool all() const { return identities() && ki && pk && kk; }
};

RetractionCheck check_retraction(const DeformationRetraction& r);
// k -> pi k pi with pi = 1 - ip, then k -> -k d k.
DeformationRetraction normalize(const DeformationRetraction& r);
DeformationRetraction hpl(const DeformationRetraction& r, const Mat& delta);

/// Retraction of C onto its cohomology (zero differential): i picks the
/// representatives of cohomology(), k inverts d on a complement of the cycles.
DeformationRetraction standard_retraction(const CochainComplex& c);

}  // namespace bvb
