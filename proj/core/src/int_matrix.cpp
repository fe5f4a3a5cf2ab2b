#include "kindex/exactalg/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "kindex/error.hpp"

namespace kindex {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, const std::vector<Integer>& diag) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix c(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) c(r, 0) = (*this)(r, j);
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal()) r += d != 0 ? 1 : 0;
  return r;
}

namespace {

// Position of the least-magnitude nonzero entry in s[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i) {
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& s = f.s;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      const auto pivot = min_pivot(s, t);
      if (!pivot) return f;  // remaining block is zero
      s.swap_rows(t, pivot->first);
      f.u.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      f.v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        f.u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        f.v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any entry the pivot does not divide into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, Integer(1));
            f.u.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.u.negate_row(t);
    }
  }
  return f;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  const std::size_t r = f.rank();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = f.v(i, j);
  return k;
}

IntMatrix solve_full_column_rank(const IntMatrix& m, const IntMatrix& rhs) {
  if (rhs.rows() != m.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side shape mismatch");
  const SmithForm f = smith_normal_form(m);
  const std::size_t r = f.rank();
  if (r != m.cols()) throw Error(ErrorCode::InvalidArgument, "matrix does not have full column rank");
  const IntMatrix ub = f.u * rhs;
  IntMatrix z(m.cols(), rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i < r) {
        if (!mpz_divisible_p(ub(i, c).get_mpz_t(), f.s(i, i).get_mpz_t())) {
          throw Error(ErrorCode::NoSolution, "no integral solution");
        }
        mpz_divexact(z(i, c).get_mpz_t(), ub(i, c).get_mpz_t(), f.s(i, i).get_mpz_t());
      } else if (ub(i, c) != 0) {
        throw Error(ErrorCode::NoSolution, "right-hand side outside the column lattice");
      }
    }
  }
  return f.v * z;
}

IntMatrix horizontal_concat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "row count mismatch in concatenation");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

}  // namespace kindex
