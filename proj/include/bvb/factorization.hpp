#pragma once

#include "bvb/bulk.hpp"
#include "bvb/bv.hpp"

#include <string>
#include <vector>

namespace bvb {

/// Interval region in [0, N]; kind is "co", "oc", "oo" or "cc" as for cellular_region.
struct Region {
  int a = 0, b = 1;
  std::string kind = "oo";
};

/// Extension-by-zero data for an ordered family of disjoint regions inside a target.
/// Sources must be disjoint as subsets of [0, N] and, at the cellular level, must not
/// be coupled by the field pairing (no vertex of one is incident to an edge of another).
struct StructureMap {
  std::vector<FieldComplex> sources;
  FieldComplex target;
  std::vector<Mat> ext;  // flat target x source, one per source
};

StructureMap structure_map(const BulkBoundaryModel& m, const std::vector<Region>& sources, const Region& target);

/// The structure map on Sym complexes: m(x_1, ..., x_r) = ext(x_1) ... ext(x_r) in the target.
class FactorizationProduct {
 public:
  // quantum = false builds classical observables (hbarCut ignored).
  FactorizationProduct(const StructureMap& s, int symCut, int hbarCut, bool quantum);

  const SymComplex& source(int i) const { return src_[i]; }
  const SymComplex& target() const { return tgt_; }
  int arity() const { return static_cast<int>(src_.size()); }

  SymElement push(int i, const SymElement& x) const;  // extension of one factor
  SymElement apply(const std::vector<SymElement>& xs) const;

  /// Exhaustive chain-map check D m(x) = sum_i (-1)^{|x_1|+...+|x_{i-1}|} m(.., D x_i, ..)
  /// on all tuples of basis monomials with total Sym-degree <= maxTotal.
  bool check_chain_map(int maxTotal) const;

 private:
  std::vector<SymComplex> src_;
  SymComplex tgt_;
  std::vector<GenMap> gen_;
};

}  // namespace bvb
