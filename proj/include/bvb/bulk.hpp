#pragma once

#include "bvb/cellular.hpp"

#include <map>

namespace bvb {

/// Boundary fields in a basis adapted to a Lagrangian split: coordinate j lies
/// in L when inL[j], otherwise in the complement Lperp.
struct BoundaryData {
  CochainComplex B;   // (E_boundary, Q_boundary)
  Mat omega;          // degree 0, graded antisymmetric
  std::vector<bool> inL;

  int size() const { return B.size(); }
  std::vector<int> L() const;
  std::vector<int> Lperp() const;
};

/// Rebases boundary data so that the given column spans become coordinate subspaces.
BoundaryData adapt_boundary(const CochainComplex& B, const Mat& omega, const Mat& Lcols, const Mat& Lperp_cols);

struct LagrangianCheck {
  bool nondegenerate = false, half_rank = false, isotropic = false, closed = false;
  bool pass() const { return nondegenerate && half_rank && isotropic && closed; }
};
LagrangianCheck lagrangian_check(const BoundaryData& bd);

/// Q_boundary = Q_L + Q_Lperp + Q_rel, plus the twisting cocycle mu(a,b) = <a, Q_rel b>.
struct Decomposition {
  CochainComplex L, Lperp;
  Mat Q_rel;       // L x Lperp
  Mat Q_L_to_Lperp;  // must vanish
  Mat mu;          // on Lperp, degree +1
};
Decomposition decompose(const BoundaryData& bd);

/// Bulk fields C(region) (x) B over cellular intervals in [0, N], with boundary
/// conditions at selected vertices: a vertex v in `conditions` keeps only the
/// coordinates j with conditions[v][j].
struct BulkBoundaryModel {
  BoundaryData bd;
  int N = 1;
  std::map<int, std::vector<bool>> conditions;
};

BulkBoundaryModel half_line_model(const BoundaryData& bd, int N);

struct FieldComplex {
  CellularInterval cells;
  CochainComplex E;
  Mat pairing;                            // degree -1, graded antisymmetric
  std::vector<std::pair<int, int>> basis;  // (position in cells, boundary coordinate)

  int size() const { return E.size(); }
  // Flat index of (cell position, coordinate), or -1.
  int index(int cell_pos, int coord) const;
};

FieldComplex bulk_fields(const BulkBoundaryModel& m, int a, int b, const std::string& kind);
FieldComplex conditioned_fields(const BulkBoundaryModel& m, int a, int b, const std::string& kind);

// Value at vertex v: a map to the boundary space.
Mat restriction(const FieldComplex& f, int v);
// Green's form: the boundary-vertex telescoping form <rho_a e1, rho_a e2> - <rho_b e1, rho_b e2>.
Mat telescoping_form(const FieldComplex& f, const BoundaryData& bd);

// Extension by zero from a subregion, as a flat target x source matrix.
Mat extension(const FieldComplex& from, const FieldComplex& to);

/// Correspondence data on [0, b) with the condition L at v_0. The small complex
/// is Lperp[-1] with differential -Q_Lperp.
struct Correspondence {
  FieldComplex fields;
  DeformationRetraction r;  // big = conditioned fields, small = Lperp[-1]
  std::vector<Q> phi;       // by edge id
  Mat mu;                   // on Lperp
  std::vector<bool> inL;
  int boundary_vertex = 0;
};

// phi indexed by edge id (entry 0 unused); rejects total weight != 1 or support outside the region.
Correspondence correspondence_maps(const BulkBoundaryModel& m, int b, const std::vector<Q>& phi);
// Mirror image on (a, N] with the condition L (the model's inL) at v_N:
// I(alpha) = phi alpha + Phi Q_rel alpha, with Phi vanishing at v_a.
Correspondence correspondence_maps_right(const BulkBoundaryModel& m, int a, const std::vector<Q>& phi);

struct CorrespondenceCheck {
  RetractionCheck retraction;
  bool boundary_in_L = false;
  bool all() const { return retraction.all() && boundary_in_L; }
};
CorrespondenceCheck check_correspondence(const Correspondence& c);

struct CocycleCheck {
  Q discrete_integral;  // cellular pairing of phi against its primitive vanishing at the open end
  Mat pulled_back;      // <I a1, I a2>
  Mat defect;           // pulled_back - mu, with mu negated at the far end or under reversal
  bool holds = false;          // defect == 0
  bool matches_integral = false;  // pulled_back == -2 * integral * mu
};
CocycleCheck quantum_cocycle_check(const Correspondence& c, bool reversed_orientation = false);

}  // namespace bvb
