#pragma once

#include "bvb/sym.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace bvb {

/// Letters are basis indices of V. Element keys are normal-ordered words.
using Word = std::vector<int>;
using WordElement = std::map<Word, HPoly>;

void add_term(WordElement& x, const Word& w, const HPoly& c);
WordElement word_scale(const WordElement& x, const Q& s);
WordElement word_sum(const WordElement& a, const WordElement& b);

/// Weyl algebra of a graded symplectic space (V, omega) with omega of degree 0:
/// v w - (-1)^{|v||w|} w v = hbar omega(v, w). Normal order puts the letters of L
/// to the left of the letters of the complement; both must be isotropic.
class WeylAlgebra {
 public:
  WeylAlgebra(GradedVectorSpace V, Mat omega, std::vector<bool> inL);

  int dim() const { return V_.size(); }
  const GradedVectorSpace& space() const { return V_; }
  const Mat& omega() const { return omega_; }
  bool in_L(int i) const { return inL_[i]; }

  WordElement one() const;
  WordElement generator(int i) const;
  // Normal form of an arbitrary word.
  WordElement normal_order(const Word& w) const;
  WordElement product(const WordElement& a, const WordElement& b) const;

  /// Right action on the Fock module W / (L W): elements are words in the complement only.
  WordElement fock_action(const WordElement& f, const WordElement& a) const;
  bool is_fock(const WordElement& f) const;

  // Graded-commutative sort of a word; 0 if an odd letter repeats.
  int sort_word(Word& w) const;

 private:
  GradedVectorSpace V_;
  Mat omega_;
  std::vector<bool> inL_;
  mutable std::map<Word, WordElement> memo_;
};

/// Moyal star product on polynomials in n even variables (sorted index multisets):
/// f * g = sum_k hbar^k / (k! 2^k) P^{i1 j1} ... P^{ik jk} d_I f d_J g,
/// so that x_i * x_j - x_j * x_i = hbar P(i, j).
WordElement star_product(const WordElement& f, const WordElement& g, const Mat& P);
WordElement poly_product(const WordElement& f, const WordElement& g);

/// Symbol of a normal-ordered Weyl word in an ungraded V: the star product of its L block
/// and complement block, with P = omega.
WordElement weyl_symbol(const WeylAlgebra& W, const WordElement& a);

// All sorted multisets of size d over n letters.
std::vector<Word> multisets(int n, int d);
// All increasing subsets of size d over n letters.
std::vector<Word> subsets(int n, int d);

/// Cohomology of (Sym(V^ + V[-1]), [Pi, -]) by (polynomial degree p, form degree q),
/// reported for p <= polyCut - 1 where the truncation cannot interfere.
std::map<std::pair<int, int>, int> lichnerowicz_cohomology(const Mat& Pi, int polyCut);

/// Homology of (Sym^{<=polyCut}(V^) (x) Lambda V^, d_Pi) with the form degree q in homological
/// degree -q, stable range p <= polyCut - 1. Keys are (p, q).
std::map<std::pair<int, int>, int> brylinski_homology_bigraded(const Mat& Pi, int polyCut);
struct BrylinskiReport {
  std::map<int, int> by_degree;  // degree -q -> dim, stable range
  int window_low = 0, window_high = 0;  // -dim V, -(dim V - dim ker Pi)
  bool in_window = false;
};
BrylinskiReport brylinski_homology(const Mat& Pi, int polyCut);

}  // namespace bvb
