#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace kindex {

// Dense matrix over an exact field F (Rational, GaussianRational, ...).
template <typename F>
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<F> data;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, F(0)) {}

  F& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Reduced row echelon form in place; returns pivot columns in order.
template <typename F>
std::vector<std::size_t> reduce_to_rref(FieldMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(sel, c), m(row, c));
    }
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const F factor = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
std::size_t matrix_rank(FieldMatrix<F> m) {
  return reduce_to_rref(m).size();
}

// Solution set of a x = b: one particular solution (free variables zero) and
// a nullspace basis.  Empty optional when inconsistent.
template <typename F>
struct LinearSolution {
  std::vector<F> particular;
  std::vector<std::vector<F>> nullspace;
};

template <typename F>
std::optional<LinearSolution<F>> solve_linear(const FieldMatrix<F>& a, const std::vector<F>& b) {
  FieldMatrix<F> aug(a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug(r, c) = a(r, c);
    aug(r, a.cols) = b[r];
  }
  const auto pivots = reduce_to_rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;

  LinearSolution<F> sol;
  sol.particular.assign(a.cols, F(0));
  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    sol.particular[pivots[i]] = aug(i, a.cols);
  }
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(a.cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, free);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace kindex
