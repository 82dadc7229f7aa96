#include "bott/linalg.hpp"

#include <utility>

#include "bott/error.hpp"

namespace bott {

IntMatrix::IntMatrix(int n, std::vector<Coeff> row_major) : n_(n), data_(std::move(row_major)) {
  if (n < 0 || data_.size() != static_cast<std::size_t>(n) * n)
    throw InputError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                     std::to_string(n * n));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Coeff>>& cols) {
  const int n = static_cast<int>(cols.size());
  IntMatrix m(n);
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(cols[c].size()) != n) throw InputError("from_columns: ragged column");
    for (int r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Coeff> IntMatrix::column(int c) const {
  std::vector<Coeff> out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Coeff> IntMatrix::apply(std::span<const Coeff> v) const {
  if (static_cast<int>(v.size()) != n_) throw InputError("apply: dimension mismatch");
  std::vector<Coeff> out(static_cast<std::size_t>(n_), 0);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[r] = checked::add(out[r], checked::mul((*this)(r, c), v[c]));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix product: dimension mismatch");
  IntMatrix out(a.n_);
  for (int r = 0; r < a.n_; ++r)
    for (int k = 0; k < a.n_; ++k) {
      const Coeff x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < a.n_; ++c) out(r, c) = checked::add(out(r, c), checked::mul(x, b(k, c)));
    }
  return out;
}

Coeff determinant(const IntMatrix& m) {
  const int n = m.n();
  if (n == 0) return 1;
  IntMatrix a = m;
  Coeff sign = 1;
  Coeff prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        // Exact division is guaranteed by Sylvester's identity.
        a(i, j) = checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

Rational::Rational(Coeff num, Coeff den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  const Coeff g = checked::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational operator+(const Rational& a, const Rational& b) {
  return {checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)), checked::mul(a.den_, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)), checked::mul(a.den_, b.den_)};
}

Rational operator*(const Rational& a, const Rational& b) {
  return {checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("rational division by zero");
  return {checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_)};
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::vector<std::vector<Rational>> solve_right(const IntMatrix& a, const IntMatrix& b) {
  const int n = a.n();
  if (b.n() != n) throw InputError("solve_right: dimension mismatch");
  // X a = b  <=>  a^T X^T = b^T. Gauss-Jordan on [a^T | b^T].
  std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(n), std::vector<Rational>(2 * static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      aug[r][c] = Rational(a(c, r));
      aug[r][n + c] = Rational(b(c, r));
    }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && aug[pivot][col].num() == 0) ++pivot;
    if (pivot == n) throw InputError("solve_right: singular matrix");
    std::swap(aug[pivot], aug[col]);
    const Rational inv = Rational(1) / aug[col][col];
    for (auto& x : aug[col]) x = x * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col].num() == 0) continue;
      const Rational f = aug[r][col];
      for (int c = 0; c < 2 * n; ++c) aug[r][c] = aug[r][c] - f * aug[col][c];
    }
  }
  // Row r of X^T is column r of X; transpose back.
  std::vector<std::vector<Rational>> x(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) x[c][r] = aug[r][n + c];
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Coeff det = determinant(m);
  if (det != 1 && det != -1) throw InputError("matrix is not unimodular (det " + std::to_string(det) + ")");
  const auto x = solve_right(m, IntMatrix::identity(m.n()));
  IntMatrix out(m.n());
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) out(r, c) = x[r][c].num();
  return out;
}

}  // namespace bott
