#pragma once

#include <map>
#include <optional>
#include <vector>

#include "covres/util.hpp"

namespace covres {

// Dense rational matrix for small exact linear algebra.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, Rat(0)) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return data_[std::size_t(i) * cols_ + j];
  }

  // Row-reduce in place; returns the pivot column of each pivot row.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int p = -1;
      for (int i = row; i < rows_; ++i)
        if (at(i, col) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
      Rat inv = at(row, col);
      for (int j = 0; j < cols_; ++j) at(row, j) /= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || at(i, col) == 0) continue;
        Rat f = at(i, col);
        for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    ExactMatrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the right kernel.
  std::vector<std::vector<Rat>> kernel() const {
    ExactMatrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rat> v(cols_, Rat(0));
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -m.at(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solve A x = b; empty optional when inconsistent.  With full column rank
  // the solution returned is the unique one.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
    check(static_cast<int>(b.size()) == rows_, "rhs length mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
  }

  std::vector<Rat> solve_unique(const std::vector<Rat>& b) const {
    auto x = solve(b);
    check(x.has_value(), "inconsistent linear system");
    check(rank() == cols_, "solution is not unique");
    return *x;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Sparse vector keyed by coordinate index.
using SparseVec = std::map<long, Rat>;

inline void sparse_axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

// Incremental row echelon form over sparse rational vectors.  Rows are kept
// with leading coefficient one, keyed by their pivot coordinate.
class SparseEchelon {
 public:
  // Reduce v against the stored rows in place.
  void reduce(SparseVec& v) const {
    while (!v.empty()) {
      long lead = v.begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) return;
      sparse_axpy(v, -v.begin()->second, it->second);
    }
  }

  // Returns true when v was independent (rank grew).
  bool insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    Rat inv = v.begin()->second;
    for (auto& [k, c] : v) c /= inv;
    long lead = v.begin()->first;
    rows_.emplace(lead, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(SparseVec v) const {
    reduce(v);
    return v.empty();
  }

 private:
  std::map<long, SparseVec> rows_;
};

// Echelon with an augmented tag block: inserting a dependent vector yields
// the coefficients expressing it over previously inserted tags.  Feeding the
// columns of a matrix, each dependency is a kernel vector.
class KernelTracker {
 public:
  // Tag should be unique per call (e.g. the column index).
  std::optional<SparseVec> insert(SparseVec v, long tag) {
    SparseVec tags;
    tags[tag] = 1;
    while (!v.empty()) {
      long lead = v.begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) break;
      Rat f = -v.begin()->second;
      sparse_axpy(v, f, it->second.first);
      sparse_axpy(tags, f, it->second.second);
    }
    if (v.empty()) return tags;
    Rat inv = v.begin()->second;
    for (auto& [k, c] : v) c /= inv;
    for (auto& [k, c] : tags) c /= inv;
    long lead = v.begin()->first;
    rows_.emplace(lead, std::make_pair(std::move(v), std::move(tags)));
    return std::nullopt;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<long, std::pair<SparseVec, SparseVec>> rows_;
};

}  // namespace covres
