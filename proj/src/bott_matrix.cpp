#include "bott/bott_matrix.hpp"

#include <algorithm>
#include <string>

#include "bott/error.hpp"
#include "bott/monomial.hpp"

namespace bott {
namespace {

std::size_t upper_index(int n, int i, int j) {
  // Row i (1-based) starts after rows 1..i-1, which hold (n-1) + ... + (n-i+1) entries.
  const auto row_start = static_cast<std::size_t>((i - 1) * n - (i - 1) * i / 2);
  return row_start + static_cast<std::size_t>(j - i - 1);
}

}  // namespace

BottMatrix::BottMatrix(int n) : n_(n) {
  if (n < 1 || n > kMaxHeight)
    throw InputError("tower height n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxHeight));
  upper_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

BottMatrix::BottMatrix(int n, std::span<const UpperEntry> entries) : BottMatrix(n) {
  std::vector<bool> seen(upper_.size(), false);
  for (const auto& e : entries) {
    check_position(e.i, e.j);
    const auto k = upper_index(n_, e.i, e.j);
    if (seen[k])
      throw InputError("entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") given twice");
    seen[k] = true;
    upper_[k] = e.value;
  }
}

void BottMatrix::check_position(int i, int j) const {
  const auto pos = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
  if (i < 1 || j < 1 || i > n_ || j > n_) throw InputError("entry " + pos + " outside a " + std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
  if (i >= j) throw InputError("entry " + pos + " is not strictly upper triangular");
}

Coeff BottMatrix::entry(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) return 0;
  return upper_[upper_index(n_, i, j)];
}

void BottMatrix::set(int i, int j, Coeff value) {
  check_position(i, j);
  upper_[upper_index(n_, i, j)] = value;
}

std::vector<UpperEntry> BottMatrix::nonzero_entries() const {
  std::vector<UpperEntry> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (Coeff v = entry(i, j); v != 0) out.push_back({i, j, v});
  return out;
}

Coeff BottMatrix::max_abs_entry() const {
  Coeff m = 0;
  for (Coeff v : upper_) m = std::max(m, checked::abs(v));
  return m;
}

}  // namespace bott
