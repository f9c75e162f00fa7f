#include "affcox/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace affcox {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("integer matrix arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row_i -= q * row_j
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    m(i, c) = checked(static_cast<__int128>(m(i, c)) - static_cast<__int128>(q) * m(j, c));
  }
}

void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m(r, i) = checked(static_cast<__int128>(m(r, i)) - static_cast<__int128>(q) * m(r, j));
  }
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec IntMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec IntMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> IntMatrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    __int128 acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<__int128>((*this)(r, c)) * v[c];
    out[r] = checked(acc);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += static_cast<__int128>(a(r, k)) * b(k, c);
      out(r, c) = checked(acc);
    }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix difference: dimension mismatch");
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = checked(static_cast<__int128>(a.data_[i]) - b.data_[i]);
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * n + c]; };
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return checked(sign * at(n - 1, n - 1));
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, col) != 0 && (best == m || std::llabs(a(i, col)) < std::llabs(a(best, col)))) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      swap_rows(a, r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        row_axpy(a, i, r, floor_div(a(i, col), a(r, col)));
        if (a(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (a(r, col) < 0)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = -a(r, c);
    for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, r, floor_div(a(i, col), a(r, col)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) out(i, c) = a(i, c);
  return out;
}

Vec reduce_modulo(const IntMatrix& hnf, std::span<const std::int64_t> v) {
  if (v.size() != hnf.cols()) throw std::invalid_argument("reduce_modulo: dimension mismatch");
  Vec out(v.begin(), v.end());
  std::size_t col = 0;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    while (hnf(i, col) == 0) ++col;
    const std::int64_t q = floor_div(out[col], hnf(i, col));
    if (q != 0)
      for (std::size_t c = 0; c < hnf.cols(); ++c)
        out[c] = checked(static_cast<__int128>(out[c]) - static_cast<__int128>(q) * hnf(i, c));
  }
  return out;
}

bool lattice_contains(const IntMatrix& hnf, std::span<const std::int64_t> v) {
  const Vec r = reduce_modulo(hnf, v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix v = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      // bring the smallest nonzero entry of the trailing block to (t, t)
      std::size_t br = m, bc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (br == m || std::llabs(a(i, j)) < std::llabs(a(br, bc)))) {
            br = i;
            bc = j;
          }
      if (br == m) break;
      swap_rows(a, t, br);
      swap_cols(a, t, bc);
      swap_cols(v, t, bc);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        row_axpy(a, i, t, floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const std::int64_t q = floor_div(a(t, j), a(t, t));
        col_axpy(a, j, t, q);
        col_axpy(v, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any offending row into row t and retry
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(a, t, bad, -1);
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
    }
  }
  SmithForm out;
  out.right = std::move(v);
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

std::optional<Vec> solve_integer(const IntMatrix& a, std::span<const std::int64_t> b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const std::int64_t det = determinant(a);
  if (det == 0) throw std::invalid_argument("solve_integer: singular matrix");
  const std::size_t n = a.rows();
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix ai = a;
    for (std::size_t r = 0; r < n; ++r) ai(r, i) = b[r];
    const std::int64_t num = determinant(ai);
    if (num % det != 0) return std::nullopt;
    x[i] = num / det;
  }
  return x;
}

Vec characteristic_polynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier; every division below is exact.
  Vec coeff(n + 1, 0);
  coeff[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) = checked(static_cast<__int128>(next(i, i)) + coeff[n - k + 1]);
    mk = next;
    const IntMatrix am = m * mk;
    __int128 trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeff[n - k] = checked(-trace / static_cast<__int128>(k));
  }
  return coeff;
}

}  // namespace affcox
