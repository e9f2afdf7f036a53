#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dgmzv/poly.hpp"

namespace dgmzv {

using RVector = std::vector<Rational>;

/// Dense matrix of rationals, row-major.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Appends a row; its length must equal cols().
  void push_row(const RVector& row);

  static RMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled
/// to integers; pivots are the first nonzero entry in row-major order.
std::size_t rank(const RMatrix& m);

/// Same over an integer matrix given as dense rows.
std::size_t rank(const std::vector<std::vector<Integer>>& m, std::size_t cols);

/// Reduced row echelon form of the span of `rows`; zero rows dropped,
/// pivot entries 1.
std::vector<RVector> rref(std::vector<RVector> rows);

/// Basis of {v : m v = 0}, returned as the reduced row echelon form of
/// that subspace. Plain Gauss-Jordan over Q.
std::vector<RVector> nullspace(const RMatrix& m);

/// Sparse integer matrix, entries stored per row as (column, value).
class IntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  using Row = std::vector<Entry>;

  explicit IntMatrix(std::size_t cols = 0) : cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Row>& row_data() const { return rows_; }

  /// Adds a row; entries are sorted, merged, and zeros dropped. Empty rows
  /// are kept (they constrain nothing).
  void push_row(Row row);

  RMatrix to_rational() const;

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Outcome of the modular kernel computation.
struct KernelCertificate {
  std::vector<RVector> basis;  ///< reduced row echelon basis of the kernel
  std::size_t rank = 0;        ///< rank over Q
  std::size_t primes_used = 0;
};

/// Kernel of an integer matrix over Q via elimination modulo primes below
/// 2^26, rational reconstruction, and an exact check of every returned vector
/// against all rows. The rank over Q is at least the rank modulo p of any
/// subset of rows, so exhibiting that many fewer than cols independent exact
/// kernel vectors pins the kernel down exactly. Throws
/// std::runtime_error if no certificate is found within the prime budget.
KernelCertificate certified_nullspace(const IntMatrix& m);

/// Rank of an integer matrix modulo a prime p < 2^26.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

/// Rational reconstruction of a residue r mod m; false if none with
/// |num|, den <= sqrt(m / 2).
bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out);

}  // namespace dgmzv
