#pragma once

#include <span>
#include <vector>

#include "bott/checked.hpp"

namespace bott {

/// One supplied entry A^i_j of a Bott matrix (1-based, i < j).
struct UpperEntry {
  int i = 0;
  int j = 0;
  Coeff value = 0;

  friend bool operator==(const UpperEntry&, const UpperEntry&) = default;
};

/// Strictly upper-triangular n x n integer matrix encoding a Bott tower:
/// column j holds the coefficients of alpha_j = sum_{i<j} A^i_j x_i.
class BottMatrix {
 public:
  /// The zero matrix of height n (the tower of (CP^1)^n).
  explicit BottMatrix(int n);

  /// Throws InputError when n is outside 1..kMaxHeight, an entry lies on or
  /// below the diagonal or outside the matrix, or a position repeats.
  BottMatrix(int n, std::span<const UpperEntry> entries);

  int n() const { return n_; }

  /// A^i_j for any 1 <= i, j <= n; zero off the strict upper triangle.
  Coeff entry(int i, int j) const;

  /// Set A^i_j; requires 1 <= i < j <= n.
  void set(int i, int j, Coeff value);

  /// Nonzero entries in row-major order.
  std::vector<UpperEntry> nonzero_entries() const;

  /// Largest |A^i_j|.
  Coeff max_abs_entry() const;

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

 private:
  void check_position(int i, int j) const;

  int n_;
  std::vector<Coeff> upper_;  // row-major strict upper triangle
};

}  // namespace bott
