#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bott {

/// A partition of n: weakly decreasing positive parts summing to n.
class Partition {
 public:
  /// Sorts the parts descending. Throws InputError on an empty list or a
  /// non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  /// Grouped form (d_1^{a_1}, ..., d_k^{a_k}) with d_1 > ... > d_k, as
  /// (d_i, a_i) pairs.
  std::vector<std::pair<int, int>> grouped() const;

  /// "[3,1,1]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Reverse-lexicographic order: (3) sorts before (2,1) before (1,1,1).
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : b.parts_ < a.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order. Throws InputError for
/// n < 1.
std::vector<Partition> partitions_of(int n);

}  // namespace bott
