#pragma once

#include "torusbt/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace torusbt {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// `cols` is only used when `rows` is empty.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);
  static IntMatrix column_vector(const std::vector<Integer>& entries);
  static IntMatrix diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  std::vector<Integer> row(std::size_t i) const;
  std::vector<std::vector<Integer>> to_rows() const;

  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_range(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_range(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  bool is_identity() const;
  /// Every column has a single entry 1 and the rest 0, and the matrix is square.
  bool is_permutation_matrix() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  /// Reduce every entry into [0, modulus).
  IntMatrix mod(const Integer& modulus) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows);
IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// U * M * V == D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
/// V_inv is the inverse of V, tracked alongside so that linear systems can be
/// solved without a second factorization.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inv;
  std::size_t rank = 0;

  /// d_0, ..., d_{min(rows, cols) - 1}.
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row Hermite normal form: same row space, echelon with positive pivots and
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Z-basis of {x : m x = 0} as the columns of the result, in column HNF.
IntMatrix kernel_basis(const IntMatrix& m);

/// Integral solution x of m x = b (b a column vector), if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b);

/// Integral solution X of m X = b for a matrix right-hand side.
std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& b);

/// Inverse of a unimodular matrix; throws Error(NotUnimodular) otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Finite(ly generated) abelian group Z/d_1 x ... x Z/d_r x Z^free_rank with
/// d_1 | d_2 | ... | d_r and every d_i >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::vector<Integer> invariant_factors, std::size_t free_rank);

  /// Canonical form of Z/n_1 x ... x Z/n_k x Z^free_rank for arbitrary n_i >= 0
  /// (0 contributes free rank, 1 is dropped).
  static FinAbGroup from_cyclic_orders(const std::vector<Integer>& orders, std::size_t free_rank = 0);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  /// Order of a finite group; throws Error(InvalidArgument) when infinite.
  Integer order() const;

  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// Isomorphism type of Z^rows / image(m).
FinAbGroup cokernel_structure(const IntMatrix& m);

/// |ker(m) on (Z/n)^cols|, where m has integer entries.
Integer kernel_order_mod(const IntMatrix& m, const Integer& n);
/// |coker(m) on (Z/n)^rows|.
Integer cokernel_order_mod(const IntMatrix& m, const Integer& n);

}  // namespace torusbt
