#pragma once

#include "bvb/sym.hpp"

#include <functional>
#include <random>

namespace bvb {

/// Graded symmetric form on W = F[1] from a degree -1 antisymmetric B on F:
/// B_W(a,b) = (-1)^{|a|_W} B(a,b).
Mat shifted_form(const GradedVectorSpace& F, const Mat& B);

/// (Sym(F[1])[hbar], Q (+ hbar Delta_B)). Pass an empty B for classical observables.
SymComplex sym_observables(const CochainComplex& F, const Mat& B, int symCut, int hbarCut);

/// (Sym(Lperp)[hbar], Q_Lperp + hbar Delta_mu). mu(a,b) = <a, Q_rel b> has degree +1
/// on Lperp; internally this is sym_observables on Lperp[-1].
SymComplex twisted_envelope(const CochainComplex& Lperp, const Mat& mu, int symCut, int hbarCut);

using SymOp = std::function<SymElement(const SymElement&)>;

// Extends a per-monomial linear map to SymElements, hbar-linearly, dropping powers above cap.
SymOp lift(std::function<void(const Monomial&, const Q&, LinComb&)> f, int hbarCap);

/// Retraction data between two Sym complexes, as operators.
struct SymRetraction {
  SymComplex big, small;
  SymOp D_big, D_small;  // differentials used in the identities
  SymOp i, p, k;
  bool normalized = false;  // true when the raw symmetrized homotopy needed normalization
};

/// Extends a linear retraction of field complexes to their truncated classical
/// Sym complexes. The homotopy is the symmetrized tensor-trick homotopy, normalized
/// when it misses a side condition. Identities and side conditions are checked
/// exhaustively up to Sym-degree checkSym (default: symCut).
SymRetraction sym_retraction(const DeformationRetraction& r, int symCut, int checkSym = -1);

/// Homological perturbation with delta = hbar * Delta_big on the Sym level.
/// The big quantum complex must be built from the same fields with a pairing.
SymRetraction perturb_quantum(const SymRetraction& r, const SymComplex& big_quantum, const SymComplex& small_quantum);

/// Exhaustive identity check on every monomial of Sym^{<=maxSym} (hbar^0 basis suffices by linearity).
RetractionCheck check_sym_retraction(const SymRetraction& r, int maxSym);

struct FiniteBVResult {
  std::map<int, int> dims;  // stable-range cohomology of (Sym(W), Delta) at hbar = 1
  int rank = 0;
  int degree = 0;
  bool concentrated = false;
  int closed_rank = 1;
  int closed_degree = 0;
  bool agrees = false;
  size_t components = 0;
};

/// W concentrated in degrees -1 and 0 with a perfect graded symmetric pairing of
/// degree +1. Components of the pairing graph are eliminated separately and
/// recombined by Kunneth.
FiniteBVResult finite_bv_cohomology(const GradedVectorSpace& W, const Mat& BW);
/// Same computation on the whole space at once (no splitting), Sym-degree cap `maxSym`.
std::map<int, int> finite_bv_bruteforce(const GradedVectorSpace& W, const Mat& BW, int maxSym);

}  // namespace bvb
