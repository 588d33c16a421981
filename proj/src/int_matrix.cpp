#include "torusbt/int_matrix.hpp"

#include "torusbt/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torusbt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> converted;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (long v : row) r.emplace_back(v);
    converted.push_back(std::move(r));
  }
  return from_rows(converted);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  if (rows.empty()) return IntMatrix(0, cols);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Integer>& entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::ShapeMismatch, "column range out of bounds");
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorCode::ShapeMismatch, "row range out of bounds");
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_permutation_matrix() const {
  if (rows_ != cols_) return false;
  std::vector<bool> row_used(rows_, false);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Integer& x = (*this)(i, j);
      if (x == 1) {
        if (row_used[i]) return false;
        row_used[i] = true;
        ++ones;
      } else if (x != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
  std::vector<Integer> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::mod(const Integer& modulus) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) {
    x %= modulus;
    if (x < 0) x += modulus;
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::ShapeMismatch, "hstack row count");
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, offset + j) = b(i, j);
    offset += b.cols();
  }
  return out;
}

IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::ShapeMismatch, "vstack column count");
    rows += b.rows();
  }
  IntMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(offset + i, j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Row and column operations applied to D together with the transforms.
class SmithReducer {
 public:
  explicit SmithReducer(SmithForm& s) : s_(s) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s_.D.cols(); ++j) std::swap(s_.D(a, j), s_.D(b, j));
    for (std::size_t j = 0; j < s_.U.cols(); ++j) std::swap(s_.U(a, j), s_.U(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s_.D.rows(); ++i) std::swap(s_.D(i, a), s_.D(i, b));
    for (std::size_t i = 0; i < s_.V.rows(); ++i) std::swap(s_.V(i, a), s_.V(i, b));
    for (std::size_t j = 0; j < s_.V_inv.cols(); ++j) std::swap(s_.V_inv(a, j), s_.V_inv(b, j));
  }

  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < s_.D.cols(); ++j) s_.D(dst, j) += q * s_.D(src, j);
    for (std::size_t j = 0; j < s_.U.cols(); ++j) s_.U(dst, j) += q * s_.U(src, j);
  }

  // col dst += q * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < s_.D.rows(); ++i) s_.D(i, dst) += q * s_.D(i, src);
    for (std::size_t i = 0; i < s_.V.rows(); ++i) s_.V(i, dst) += q * s_.V(i, src);
    for (std::size_t j = 0; j < s_.V_inv.cols(); ++j) s_.V_inv(src, j) -= q * s_.V_inv(dst, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < s_.D.cols(); ++j) s_.D(r, j) = -s_.D(r, j);
    for (std::size_t j = 0; j < s_.U.cols(); ++j) s_.U(r, j) = -s_.U(r, j);
  }

 private:
  SmithForm& s_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  SmithForm s{IntMatrix::identity(R), m, IntMatrix::identity(C), IntMatrix::identity(C), 0};
  SmithReducer ops(s);
  IntMatrix& D = s.D;

  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    // Minimal-absolute-value pivot in the trailing block.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (D(i, j) != 0 && (pi == R || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == R) break;
    ops.swap_rows(t, pi);
    ops.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        ops.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        ops.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move the smallest one in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < R; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) { bi = t; bj = j; }
        ops.swap_rows(t, bi);
        ops.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < R && divisible; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % D(t, t) != 0) {
            ops.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) ops.negate_row(t);
  }
  s.rank = t;
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t R = h.rows();
  const std::size_t C = h.cols();
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a != b)
      for (std::size_t j = 0; j < C; ++j) std::swap(h(a, j), h(b, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < C; ++j) h(dst, j) += q * h(src, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    for (;;) {
      std::size_t best = R;
      for (std::size_t i = r; i < R; ++i)
        if (h(i, c) != 0 && (best == R || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == R) break;
      swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (h(i, c) == 0) continue;
        add_row(i, r, -(h(i, c) / h(r, c)));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0)
      for (std::size_t j = 0; j < C; ++j) h(r, j) = -h(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) add_row(i, r, -q);
    }
    ++r;
  }
  return h.row_range(0, r);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t C = m.cols();
  SmithForm s = smith_normal_form(m);
  IntMatrix raw = s.V.column_range(s.rank, C - s.rank);
  if (raw.cols() == 0) return raw;
  return hermite_normal_form(raw.transpose()).transpose();
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve_integer right-hand side");
  SmithForm s = smith_normal_form(m);
  std::vector<Integer> y = s.U * b;
  std::vector<Integer> z(m.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < s.rank) {
      if (y[i] % s.D(i, i) != 0) return std::nullopt;
      z[i] = y[i] / s.D(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * z;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& b) {
  if (b.rows() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve_integer right-hand side");
  SmithForm s = smith_normal_form(m);
  IntMatrix y = s.U * b;
  IntMatrix z(m.cols(), b.cols());
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      if (i < s.rank) {
        if (y(i, j) % s.D(i, i) != 0) return std::nullopt;
        z(i, j) = y(i, j) / s.D(i, i);
      } else if (y(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return s.V * z;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols() || abs(determinant(m)) != 1)
    throw Error(ErrorCode::NotUnimodular, "matrix " + m.to_string() + " is not unimodular");
  auto inv = solve_integer(m, IntMatrix::identity(m.rows()));
  return *inv;
}

FinAbGroup::FinAbGroup(std::vector<Integer> invariant_factors, std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error(ErrorCode::InvalidArgument, "invariant factor below 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Integer>& orders, std::size_t free_rank) {
  FinAbGroup g = cokernel_structure(IntMatrix::diagonal(orders));
  g.free_rank_ += free_rank;
  return g;
}

Integer FinAbGroup::order() const {
  if (free_rank_ != 0) throw Error(ErrorCode::InvalidArgument, "order of an infinite group");
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::string FinAbGroup::to_string() const {
  std::string out;
  for (const auto& d : factors_) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.get_str();
  }
  if (free_rank_ > 0) {
    if (!out.empty()) out += " x ";
    out += free_rank_ == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank_);
  }
  return out.empty() ? "0" : out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FinAbGroup::from_cyclic_orders(orders, a.free_rank() + b.free_rank());
}

FinAbGroup cokernel_structure(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<Integer> factors;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i >= s.rank) {
      ++free_rank;
    } else if (s.D(i, i) != 1) {
      factors.push_back(s.D(i, i));
    }
  }
  return FinAbGroup(std::move(factors), free_rank);
}

namespace {

Integer torsion_count(const SmithForm& s, std::size_t slots, const Integer& n) {
  Integer count = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    Integer d = i < s.rank ? Integer(s.D(i, i)) : Integer(0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    count *= g;
  }
  return count;
}

}  // namespace

Integer kernel_order_mod(const IntMatrix& m, const Integer& n) {
  return torsion_count(smith_normal_form(m.mod(n)), m.cols(), n);
}

Integer cokernel_order_mod(const IntMatrix& m, const Integer& n) {
  return torsion_count(smith_normal_form(m.mod(n)), m.rows(), n);
}

}  // namespace torusbt
