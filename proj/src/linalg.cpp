#include "glc/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace glc {

std::vector<std::size_t> Matrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
    }
    const Scalar inv = (*this)(r, c).inverse();
    for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      const Scalar f = (*this)(i, c);
      for (std::size_t k = c; k < cols_; ++k) {
        if (!(*this)(r, k).is_zero()) (*this)(i, k) -= f * (*this)(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.row_reduce().size();
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix m = *this;
  const std::vector<std::size_t> pivots = m.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  const Scalar zero = a_.empty() ? Scalar() : a_.front() - a_.front();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols_, zero);
    v[f] = zero + (zero.characteristic() ? Scalar(1, zero.characteristic()) : Scalar(mpq_class(1)));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

void RowSpace::reduce(std::vector<Scalar>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
    }
  }
}

bool RowSpace::insert(std::vector<Scalar> v) {
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // Keep existing rows reduced at the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!v[k].is_zero()) row[k] -= f * v[k];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  std::map<std::size_t, SparseRow> pivots;  // leading column -> row with unit lead
  SparseRow next;
  for (SparseRow& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      // row -= c * pivot, merging the sorted supports.
      const Scalar c = row.front().second;
      const SparseRow& p = it->second;
      next.clear();
      std::size_t a = 1, b = 1;
      while (a < row.size() || b < p.size()) {
        if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
          next.push_back(std::move(row[a++]));
        } else if (a == row.size() || p[b].first < row[a].first) {
          next.emplace_back(p[b].first, -(c * p[b].second));
          ++b;
        } else {
          Scalar v = row[a].second - c * p[b].second;
          if (!v.is_zero()) next.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      std::swap(row, next);
    }
    if (row.empty()) continue;
    const Scalar inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    const std::size_t lead = row.front().first;
    pivots.emplace(lead, std::move(row));
  }
  return pivots.size();
}

}  // namespace glc
