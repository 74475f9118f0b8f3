#pragma once

#include "bvb/graded.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace bvb {

/// Polynomial in hbar, coefficient i multiplies hbar^i. Trailing zeros trimmed.
struct HPoly {
  std::vector<Q> c;

  HPoly() = default;
  explicit HPoly(const Q& constant, int power = 0);
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Q at(int i) const { return i < static_cast<int>(c.size()) ? c[i] : Q(0); }
  void add(const Q& x, int power);
  void add(const HPoly& o, const Q& scale = 1, int shift = 0);
  void trim();
  // Drops powers above cap; used only where the quotient ring is intended.
  void truncate(int cap);
  bool operator==(const HPoly& o) const { return c == o.c; }
};

/// Sorted multiset of generator ranks. Ranks order generators by (degree, index).
struct Monomial {
  static constexpr int kMax = 24;
  uint8_t n = 0;
  std::array<uint16_t, kMax> g{};

  int size() const { return n; }
  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

/// Linear map between generator spaces, columns in rank coordinates.
struct GenMap {
  int degree = 0;
  std::vector<std::vector<std::pair<int, Q>>> col;
};

class SymAlgebra;
using LinComb = std::map<Monomial, Q>;

/// Element of Sym(W)[hbar].
struct SymElement {
  std::map<Monomial, HPoly> terms;

  bool zero() const { return terms.empty(); }
  void add(const Monomial& m, const Q& x, int power = 0);
  void add(const SymElement& o, const Q& scale = 1, int shift = 0);
  void add(const LinComb& o, int power = 0);
  int max_sym_degree() const;
  int max_hbar() const;
  bool operator==(const SymElement& o) const { return terms == o.terms; }
};

/// Free graded-commutative algebra on a graded generator space W.
class SymAlgebra {
 public:
  SymAlgebra() = default;
  explicit SymAlgebra(GradedVectorSpace gens);

  const GradedVectorSpace& gens() const { return gens_; }
  int ngens() const { return gens_.size(); }
  int rank_of(int orig) const { return rank_[orig]; }
  int orig_of(int r) const { return order_[r]; }
  int deg(int r) const { return deg_[r]; }
  bool odd(int r) const { return odd_[r]; }
  int degree(const Monomial& m) const;

  Monomial generator(int orig) const;
  // Sorts a word of ranks; returns the Koszul sign, or 0 for a repeated odd generator.
  int normal_form(uint16_t* w, int n) const;
  int multiply(const Monomial& a, const Monomial& b, Monomial& out) const;
  SymElement multiply(const SymElement& a, const SymElement& b, int symCut, int hbarCut) const;

  // All monomials of Sym-degree exactly s / at most s, in increasing order.
  std::vector<Monomial> monomials_of_degree(int s) const;
  std::vector<Monomial> monomials(int maxdeg) const;

  GenMap genmap(const Mat& m, const SymAlgebra& target, int degree) const;
  // Rank-indexed symmetric pairing table from a flat matrix on W.
  std::vector<std::vector<std::pair<int, Q>>> pair_table(const Mat& B) const;

  // Serialization helper: (degree, original index, multiplicity) triples.
  std::vector<std::array<int, 3>> describe(const Monomial& m) const;

 private:
  GradedVectorSpace gens_;
  std::vector<int> order_, rank_, deg_;
  std::vector<bool> odd_;
};

// out += coeff * f(m), where f is a degree-`f.degree` map on generators extended as a derivation.
void apply_derivation(const SymAlgebra& A, const GenMap& f, const Monomial& m, const Q& coeff, LinComb& out);
// out += coeff * Sym(f)(m), f of degree 0 from A to B.
void apply_algebra_map(const SymAlgebra& A, const SymAlgebra& B, const GenMap& f, const Monomial& m,
                       const Q& coeff, LinComb& out);
// out += coeff * Delta(m): sum over pairs of positions with the Koszul sign of moving them to the front.
void apply_laplacian(const SymAlgebra& A, const std::vector<std::vector<std::pair<int, Q>>>& pairs,
                     const Monomial& m, const Q& coeff, LinComb& out);

/// Truncated complex (Sym^{<=symCut}(W)[hbar]/hbar^{hbarCut+1}, Q + hbar*Delta).
struct SymComplex {
  SymAlgebra alg;
  Mat dW;  // generator differential, flat on W
  Mat BW;  // graded symmetric pairing of degree +1 on W, empty if classical
  int symCut = 0, hbarCut = 0;
  GenMap q;
  std::vector<std::vector<std::pair<int, Q>>> pairs;

  bool quantum() const { return BW.size() > 0; }
  LinComb apply_Q(const Monomial& m) const;
  LinComb apply_Delta(const Monomial& m) const;
  SymElement apply(const SymElement& x) const;  // (Q + hbar Delta)
  SymElement apply_Q(const SymElement& x) const;
  SymElement apply_Delta(const SymElement& x) const;
};

SymComplex make_sym_complex(const GradedVectorSpace& W, const Mat& dW, const Mat& BW, int symCut, int hbarCut);

/// Cohomology dimensions per degree of a filtration piece Sym^{<=maxSym}.
/// The Sym-degree filtration is respected by Q + hbar*Delta, so these are exact.
std::map<int, int> sym_cohomology(const SymComplex& c, int maxSym = -1);

/// Cohomology of (Sym^{<=maxSym}(W), Delta) at hbar = 1, reported per
/// (degree, Sym-degree) only inside the stable range Sym-degree <= maxSym - 2.
std::map<std::pair<int, int>, int> delta_cohomology(const SymAlgebra& A, const std::vector<std::vector<std::pair<int, Q>>>& pairs,
                                                    int maxSym);

/// Whether x = (Q + hbar Delta) y for some y in the truncation. Decided separately in
/// each (weight, degree) block of x.
bool is_coboundary(const SymComplex& c, const SymElement& x);

struct StructuralCheck {
  bool q2 = true, delta2 = true, anticommute = true, total2 = true;
  size_t monomials = 0;
  bool all() const { return q2 && delta2 && anticommute && total2; }
};
// Exhaustive over every basis monomial of the truncation.
StructuralCheck check_structure(const SymComplex& c);

}  // namespace bvb
