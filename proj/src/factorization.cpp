#include "bvb/factorization.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace bvb {

namespace {

// Open interval (lo, hi) interior plus closed endpoints; disjointness on the real line.
bool overlap(const Region& x, const Region& y) {
  if (x.b < y.a || y.b < x.a) return false;
  if (x.b == y.a) return x.kind[1] == 'c' && y.kind[0] == 'c';
  if (y.b == x.a) return y.kind[1] == 'c' && x.kind[0] == 'c';
  return true;
}

bool contained(const Region& x, const Region& t) {
  if (x.a < t.a || x.b > t.b) return false;
  if (x.a == t.a && x.kind[0] == 'c' && t.kind[0] != 'c') return false;
  if (x.b == t.b && x.kind[1] == 'c' && t.kind[1] != 'c') return false;
  return true;
}

}  // namespace

StructureMap structure_map(const BulkBoundaryModel& m, const std::vector<Region>& sources, const Region& target) {
  StructureMap s;
  s.target = conditioned_fields(m, target.a, target.b, target.kind);
  for (size_t i = 0; i < sources.size(); ++i) {
    if (!contained(sources[i], target)) throw std::invalid_argument("structure_map: region not inside the target");
    for (size_t j = 0; j < i; ++j)
      if (overlap(sources[i], sources[j])) throw std::invalid_argument("structure_map: overlapping regions");
    s.sources.push_back(conditioned_fields(m, sources[i].a, sources[i].b, sources[i].kind));
    s.ext.push_back(extension(s.sources.back(), s.target));
  }
  for (size_t i = 0; i < sources.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Mat coupling = Mat(s.ext[i].transpose()) * s.target.pairing * s.ext[j];
      if (!is_zero(coupling))
        throw std::invalid_argument("structure_map: regions share a vertex of an edge; the cellular pairing couples them");
    }
  return s;
}

FactorizationProduct::FactorizationProduct(const StructureMap& s, int symCut, int hbarCut, bool quantum) {
  auto build = [&](const FieldComplex& f) {
    return sym_observables(f.E, quantum ? f.pairing : Mat(), symCut, quantum ? hbarCut : 0);
  };
  tgt_ = build(s.target);
  for (size_t i = 0; i < s.sources.size(); ++i) {
    src_.push_back(build(s.sources[i]));
    gen_.push_back(src_.back().alg.genmap(s.ext[i], tgt_.alg, 0));
  }
}

SymElement FactorizationProduct::push(int i, const SymElement& x) const {
  std::vector<LinComb> by_power;
  for (auto& [m, p] : x.terms)
    for (int j = 0; j <= p.degree(); ++j) {
      if (sgn(p.at(j)) == 0) continue;
      if (static_cast<int>(by_power.size()) <= j) by_power.resize(j + 1);
      apply_algebra_map(src_[i].alg, tgt_.alg, gen_[i], m, p.at(j), by_power[j]);
    }
  SymElement out;
  for (size_t j = 0; j < by_power.size(); ++j) out.add(by_power[j], static_cast<int>(j));
  return out;
}

SymElement FactorizationProduct::apply(const std::vector<SymElement>& xs) const {
  if (static_cast<int>(xs.size()) != arity()) throw std::invalid_argument("FactorizationProduct: wrong number of factors");
  SymElement y;
  y.add(Monomial{}, Q(1));
  for (int i = 0; i < arity(); ++i) y = tgt_.alg.multiply(y, push(i, xs[i]), tgt_.symCut, tgt_.hbarCut);
  return y;
}

bool FactorizationProduct::check_chain_map(int maxTotal) const {
  std::vector<std::vector<Monomial>> basis;
  for (auto& c : src_) basis.push_back(c.alg.monomials(maxTotal));
  std::vector<SymElement> xs(arity());
  std::vector<int> degs(arity());
  bool ok = true;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (!ok) return;
    if (i == arity()) {
      SymElement lhs = tgt_.apply(apply(xs));
      SymElement rhs;
      int sign = 1;
      for (int t = 0; t < arity(); ++t) {
        std::vector<SymElement> ys = xs;
        ys[t] = src_[t].apply(xs[t]);
        rhs.add(apply(ys), Q(sign));
        sign *= sign_pow(degs[t]);
      }
      if (!(lhs == rhs)) ok = false;
      return;
    }
    for (const auto& m : basis[i]) {
      if (used + m.n > maxTotal) continue;
      xs[i] = SymElement{};
      xs[i].add(m, Q(1));
      degs[i] = src_[i].alg.degree(m);
      rec(i + 1, used + m.n);
    }
  };
  rec(0, 0);
  return ok;
}

}  // namespace bvb
