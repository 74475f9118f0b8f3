#pragma once

#include "bvb/rational.hpp"

#include <optional>
#include <vector>

namespace bvb {

/// Reduced row-echelon form. Pivots are taken left to right, so the first
/// nonzero column of each row wins ties.
struct Rref {
  Mat R;
  std::vector<int> pivots;
};

Rref rref(Mat a);
long rank(const Mat& a);

// Columns spanning the kernel, one per free column of the RREF.
Mat nullspace(const Mat& a);
// Pivot columns of a, a basis of its column space.
Mat column_basis(const Mat& a);
// Columns of `extra` that extend span(base) one step at a time.
Mat extend_basis(const Mat& base, const Mat& extra);

std::optional<Vec> solve(const Mat& a, const Vec& b);
Mat inverse(const Mat& a);
// a * b, skipping zero entries of a and b; much faster than the dense product on sparse input.
Mat mul(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);

// Rows/columns picked by index lists.
Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace bvb
