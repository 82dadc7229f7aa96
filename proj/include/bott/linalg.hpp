#pragma once

#include <span>
#include <string>
#include <vector>

#include "bott/checked.hpp"

namespace bott {

/// Dense square integer matrix, row-major. Used for the action of a ring map
/// on degree-2 classes: column j holds the coefficients of phi(x_j).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(int n, std::vector<Coeff> row_major);

  static IntMatrix identity(int n);

  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<std::vector<Coeff>>& cols);

  int n() const { return n_; }
  Coeff operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  Coeff& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }

  std::vector<Coeff> column(int c) const;
  const std::vector<Coeff>& row_major() const { return data_; }

  std::vector<Coeff> apply(std::span<const Coeff> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Coeff> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Coeff determinant(const IntMatrix& m);

/// Reduced fraction num/den with den > 0 and checked arithmetic.
class Rational {
 public:
  Rational(Coeff num = 0, Coeff den = 1);

  Coeff num() const { return num_; }
  Coeff den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const;

 private:
  Coeff num_;
  Coeff den_;
};

/// Solve X * a = b over the rationals for square invertible a (so X = b a^{-1}).
/// Throws InputError when a is singular.
std::vector<std::vector<Rational>> solve_right(const IntMatrix& a, const IntMatrix& b);

/// Integer inverse of a unimodular matrix; throws InputError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace bott
