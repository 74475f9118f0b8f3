#pragma once

#include "bvb/rational.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace bvb {

/// Sparse vector, entries sorted by index with nonzero coefficients.
using SparseVec = std::vector<std::pair<int, Q>>;

// y += c * x
void axpy(SparseVec& y, const Q& c, const SparseVec& x);

/// Incremental Gaussian elimination. Each stored vector is keyed by its lowest
/// index, where it has coefficient 1.
class Eliminator {
 public:
  // Returns true when v was independent of what is stored (and stores it).
  bool insert(SparseVec v);
  bool in_span(SparseVec v) const;
  size_t rank() const { return piv_.size(); }

 private:
  void reduce(SparseVec& v) const;
  std::unordered_map<int, SparseVec> piv_;
};

// Rank of the matrix with the given columns.
size_t sparse_rank(std::vector<SparseVec> cols);

/// Union-find, used to split block matrices into independent components.
class DisjointSets {
 public:
  explicit DisjointSets(size_t n);
  size_t find(size_t x);
  void unite(size_t a, size_t b);

 private:
  std::vector<size_t> parent_;
};

}  // namespace bvb
