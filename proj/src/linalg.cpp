#include "qzm/linalg.hpp"

#include <algorithm>
#include <limits>

namespace qzm {

SparseVec unit_vec(std::uint32_t k, const FieldSpec& f) { return SparseVec{{k, Scalar::one(f)}}; }

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar v = y[i].second + a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  if (a.is_zero()) return {};
  SparseVec out = x;
  for (auto& [k, v] : out) v *= a;
  return out;
}

void SparseAccumulator::add(std::uint32_t k, const Scalar& v) {
  if (!v.is_zero()) raw_.emplace_back(k, v);
}

void SparseAccumulator::add(const SparseVec& x, const Scalar& a) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) raw_.emplace_back(k, a * v);
}

SparseVec SparseAccumulator::take() {
  std::stable_sort(raw_.begin(), raw_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, v] : raw_) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else {
      out.emplace_back(k, std::move(v));
    }
  }
  raw_.clear();
  return out;
}

SparseVec combine(const std::vector<SparseVec>& columns, const SparseVec& v) {
  SparseAccumulator acc;
  for (const auto& [k, c] : v) acc.add(columns[k], c);
  return acc.take();
}

SparseVec remap(const SparseVec& x, const std::vector<std::uint32_t>& index_map) {
  SparseAccumulator acc;
  for (const auto& [k, c] : x) acc.add(index_map[k], c);
  return acc.take();
}

Scalar entry(const SparseVec& x, std::uint32_t k) {
  auto it = std::lower_bound(x.begin(), x.end(), k, [](const auto& e, std::uint32_t key) { return e.first < key; });
  if (it != x.end() && it->first == k) return it->second;
  return Scalar();
}

Echelon eliminate(std::vector<SparseVec> rows, std::uint32_t columns) {
  Echelon ech;
  ech.columns = columns;
  ech.is_pivot.assign(columns, false);
  std::vector<std::vector<std::size_t>> bucket(columns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) bucket[rows[r].front().first].push_back(r);

  std::vector<std::size_t> pivot_row(columns, std::numeric_limits<std::size_t>::max());
  for (std::uint32_t c = 0; c < columns; ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::sort(cand.begin(), cand.end());
    std::size_t best = 0;
    for (std::size_t t = 1; t < cand.size(); ++t)
      if (rows[cand[t]].size() < rows[cand[best]].size()) best = t;
    const std::size_t pr = cand[best];
    SparseVec& piv = rows[pr];
    const Scalar inv = piv.front().second.inverse();
    if (!inv.is_one()) piv = scaled(piv, inv);
    for (std::size_t t = 0; t < cand.size(); ++t) {
      if (t == best) continue;
      SparseVec& r = rows[cand[t]];
      r = axpy(r, -r.front().second, piv);
      if (!r.empty()) bucket[r.front().first].push_back(cand[t]);
    }
    cand.clear();
    cand.shrink_to_fit();
    pivot_row[c] = pr;
    ech.is_pivot[c] = true;
    ++ech.rank;
  }

  // Back substitution: express every pivot row in free variables only.
  ech.normal_form.assign(columns, SparseVec{});
  std::vector<SparseVec> tail(columns);  // pivot row minus its leading 1, free-only
  for (std::uint32_t c = columns; c-- > 0;) {
    if (!ech.is_pivot[c]) continue;
    SparseAccumulator acc;
    const SparseVec& row = rows[pivot_row[c]];
    for (std::size_t t = 1; t < row.size(); ++t) {
      const auto& [k, v] = row[t];
      if (ech.is_pivot[k])
        acc.add(tail[k], -v);
      else
        acc.add(k, v);
    }
    tail[c] = acc.take();
    ech.normal_form[c] = scaled(tail[c], Scalar::from_int(*row.front().second.field(), -1));
  }
  for (std::uint32_t c = 0; c < columns; ++c) {
    if (ech.is_pivot[c]) continue;
    ech.free_vars.push_back(c);
  }
  return ech;
}

}  // namespace qzm
