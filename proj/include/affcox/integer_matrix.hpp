#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace affcox {

using Vec = std::vector<std::int64_t>;

/// Dense integer matrix, row-major. Small sizes only (rank <= 8 plus
/// generator concatenations); all arithmetic is exact and overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_vectors() const;
  IntMatrix transpose() const;

  Vec apply(std::span<const std::int64_t> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
std::int64_t determinant(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `generators`. The result has one row per pivot: pivots are positive,
/// strictly move right, entries above a pivot lie in [0, pivot).
/// Two generator sets span the same lattice iff their HNFs are equal.
IntMatrix hermite_normal_form(const IntMatrix& generators);

/// Reduces `v` modulo the lattice whose HNF is `hnf`. The result is the
/// canonical representative of v + L (coordinates at pivot columns lie in
/// [0, pivot)). Idempotent.
Vec reduce_modulo(const IntMatrix& hnf, std::span<const std::int64_t> v);

bool lattice_contains(const IntMatrix& hnf, std::span<const std::int64_t> v);

/// Smith form U * A * V = diag(d_1, ..., d_r) with d_i | d_{i+1}; only V is kept,
/// since for a row lattice L = rowspace(A) the map x -> x * V identifies
/// Z^n / L with (+)_i Z/d_i (and Z for the columns past the rank).
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, ascending
  IntMatrix right;                     // V, unimodular, cols x cols
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Exact solution of a * x = b for square nonsingular `a`, if it is integral.
std::optional<Vec> solve_integer(const IntMatrix& a, std::span<const std::int64_t> b);

/// Characteristic polynomial det(xI - m), coefficients from x^0 up to x^n.
Vec characteristic_polynomial(const IntMatrix& m);

}  // namespace affcox
