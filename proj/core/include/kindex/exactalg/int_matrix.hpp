#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "kindex/exactalg/rational.hpp"

namespace kindex {

// Dense row-major matrix of arbitrary-precision integers.  Zero rows or
// columns are allowed; they model maps to or from the zero group.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Integer>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  // Column j as a standalone column vector.
  IntMatrix column(std::size_t j) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant via fraction-free (Bareiss) elimination.  Square only.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix s;  // rows x cols, diagonal d_1 | d_2 | ..., all d_i >= 0
  IntMatrix v;  // cols x cols, unimodular
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

// u * m * v == s.  Pivot is always the nonzero entry of least absolute value
// in the active submatrix.
SmithForm smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : m x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& m);

// Integer solution of m x = b for each column b of rhs.  Requires m to have
// full column rank; throws NoSolution if some column has no integral solution.
IntMatrix solve_full_column_rank(const IntMatrix& m, const IntMatrix& rhs);

IntMatrix horizontal_concat(const IntMatrix& a, const IntMatrix& b);

}  // namespace kindex
