#include "bott/partition.hpp"

#include <algorithm>
#include <functional>

#include "bott/error.hpp"

namespace bott {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("partition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw InputError("partition part " + std::to_string(p) + " is not positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::vector<std::pair<int, int>> Partition::grouped() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw InputError("partitions_of: n must be positive, got " + std::to_string(n));
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest part first, trying larger parts before smaller: reverse-lex order.
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      extend(remaining - p, p);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

}  // namespace bott
