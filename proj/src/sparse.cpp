#include "bvb/sparse.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace bvb {

void axpy(SparseVec& y, const Q& c, const SparseVec& x) {
  if (sgn(c) == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, c * x[j].second);
      ++j;
    } else {
      Q s = y[i].second + c * x[j].second;
      if (sgn(s) != 0) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

void Eliminator::reduce(SparseVec& v) const {
  while (!v.empty()) {
    auto it = piv_.find(v.front().first);
    if (it == piv_.end()) return;
    Q c = -v.front().second;
    axpy(v, c, it->second);
  }
}

bool Eliminator::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  Q inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  int key = v.front().first;
  piv_.emplace(key, std::move(v));
  return true;
}

bool Eliminator::in_span(SparseVec v) const {
  // Pivots are keyed by leading index, so a leftover leading entry means
  // the vector escapes the span.
  reduce(v);
  return v.empty();
}

size_t sparse_rank(std::vector<SparseVec> cols) {
  // Markowitz pivoting: sparsest column first, then its sparsest row.
  std::unordered_map<int, std::unordered_set<int>> rows;
  for (size_t j = 0; j < cols.size(); ++j)
    for (auto& [r, x] : cols[j]) rows[r].insert(static_cast<int>(j));
  using Item = std::pair<size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (size_t j = 0; j < cols.size(); ++j)
    if (!cols[j].empty()) heap.emplace(cols[j].size(), static_cast<int>(j));
  std::vector<bool> done(cols.size(), false);
  size_t rank = 0;
  while (!heap.empty()) {
    auto [nnz, j] = heap.top();
    heap.pop();
    if (done[j] || cols[j].size() != nnz) continue;
    done[j] = true;
    SparseVec piv = std::move(cols[j]);
    cols[j].clear();
    if (piv.empty()) continue;
    size_t best = 0;
    for (size_t k = 1; k < piv.size(); ++k)
      if (rows[piv[k].first].size() < rows[piv[best].first].size()) best = k;
    const int r = piv[best].first;
    const Q a = piv[best].second;
    for (auto& [rr, x] : piv) rows[rr].erase(j);
    std::vector<int> hit(rows[r].begin(), rows[r].end());
    for (int t : hit) {
      SparseVec& c = cols[t];
      auto it = std::lower_bound(c.begin(), c.end(), r, [](const auto& e, int key) { return e.first < key; });
      Q f = -it->second / a;
      for (auto& [rr, x] : c) rows[rr].erase(t);
      axpy(c, f, piv);
      for (auto& [rr, x] : c) rows[rr].insert(t);
      if (!c.empty()) heap.emplace(c.size(), t);
    }
    rows.erase(r);
    ++rank;
  }
  return rank;
}

DisjointSets::DisjointSets(size_t n) : parent_(n) {
  for (size_t i = 0; i < n; ++i) parent_[i] = i;
}

size_t DisjointSets::find(size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(size_t a, size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) parent_[b] = a;
  else parent_[a] = b;
}

}  // namespace bvb
