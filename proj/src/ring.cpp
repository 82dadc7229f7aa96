#include "bott/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <unordered_map>

#include "bott/error.hpp"

namespace bott {

struct BottRing::ProductCache {
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  mutable std::shared_mutex mutex;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, CohomologyClass, KeyHash> table;
};

BottRing::BottRing(BottMatrix matrix)
    : matrix_(std::move(matrix)), cache_(std::make_shared<ProductCache>()) {
  const int n = matrix_.n();
  alphas_.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < j; ++i) alphas_[j - 1].add_term(Monomial::generator(i), matrix_.entry(i, j));
}

void BottRing::check_index(int j) const {
  if (j < 1 || j > n()) throw InputError("generator index " + std::to_string(j) + " outside 1.." + std::to_string(n()));
}

void BottRing::check_fits(const CohomologyClass& c) const {
  if (c.max_index() > n())
    throw InputError("dimension mismatch: class " + c.to_string() + " does not live in a ring of height " +
                     std::to_string(n()));
}

const CohomologyClass& BottRing::alpha(int j) const {
  check_index(j);
  return alphas_[j - 1];
}

CohomologyClass BottRing::generator(int j) const {
  check_index(j);
  return CohomologyClass::generator(j);
}

CohomologyClass BottRing::mul_monomials(Monomial a, Monomial b) const {
  const Monomial common = a & b;
  if (common.empty()) return CohomologyClass::term(a | b, 1);

  const std::pair<std::uint64_t, std::uint64_t> key{std::min(a.bits(), b.bits()), std::max(a.bits(), b.bits())};
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->table.find(key); it != cache_->table.end()) return it->second;
  }

  // a b = (a/x_j)(b/x_j) x_j^2 = (a/x_j)(b/x_j) alpha_j x_j with j the highest
  // shared index. Every recursive call works below j, and neither factor nor
  // alpha_j mentions x_j, so the final multiplication by x_j is a plain union.
  const int j = common.highest();
  const CohomologyClass rest = mul_monomials(a.without(j), b.without(j));
  const CohomologyClass below = mul(rest, alphas_[j - 1]);
  CohomologyClass result;
  for (const auto& [m, c] : below.terms()) result.add_term(m.with(j), c);

  std::unique_lock lock(cache_->mutex);
  cache_->table.try_emplace(key, result);
  return result;
}

CohomologyClass BottRing::mul(const CohomologyClass& a, const CohomologyClass& b) const {
  check_fits(a);
  check_fits(b);
  CohomologyClass out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Coeff scale = checked::mul(ca, cb);
      if ((ma & mb).empty()) {
        out.add_term(ma | mb, scale);
        continue;
      }
      const CohomologyClass prod = mul_monomials(ma, mb);
      for (const auto& [m, c] : prod.terms()) out.add_term(m, checked::mul(scale, c));
    }
  }
  return out;
}

CohomologyClass BottRing::power(const CohomologyClass& c, unsigned k) const {
  CohomologyClass out = CohomologyClass::unit();
  for (unsigned i = 0; i < k; ++i) out = mul(out, c);
  return out;
}

CohomologyClass BottRing::reduce_monomial(std::span<const int> exponents, RewriteOrder order,
                                          std::uint64_t seed) const {
  if (static_cast<int>(exponents.size()) > n())
    throw InputError("reduce_monomial: " + std::to_string(exponents.size()) + " exponents for height " +
                     std::to_string(n()));
  using Exps = std::vector<int>;
  std::map<Exps, Coeff> work;
  Exps start(static_cast<std::size_t>(n()), 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw InputError("reduce_monomial: negative exponent");
    start[i] = exponents[i];
  }
  work.emplace(std::move(start), 1);

  std::mt19937_64 rng(seed);
  CohomologyClass out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    Exps exps = std::move(node.key());
    const Coeff coeff = node.mapped();

    std::vector<int> squared;
    for (int j = 1; j <= n(); ++j)
      if (exps[j - 1] >= 2) squared.push_back(j);

    if (squared.empty()) {
      Monomial m;
      for (int j = 1; j <= n(); ++j)
        if (exps[j - 1] == 1) m = m.with(j);
      out.add_term(m, coeff);
      continue;
    }

    int j = 0;
    switch (order) {
      case RewriteOrder::HighestFirst: j = squared.back(); break;
      case RewriteOrder::LowestFirst: j = squared.front(); break;
      case RewriteOrder::Random:
        j = squared[std::uniform_int_distribution<std::size_t>(0, squared.size() - 1)(rng)];
        break;
    }

    // x_j^e -> x_j^{e-1} alpha_j
    exps[j - 1] -= 1;
    for (const auto& [m, a] : alphas_[j - 1].terms()) {
      Exps next = exps;
      next[m.highest() - 1] += 1;
      auto [it, inserted] = work.try_emplace(std::move(next), 0);
      it->second = checked::add(it->second, checked::mul(coeff, a));
      if (it->second == 0) work.erase(it);
    }
  }
  return out;
}

Coeff BottRing::top_coefficient(const CohomologyClass& c) const { return c.coefficient(Monomial::top(n())); }

CohomologyClass BottRing::fiber_total_chern_class(int j) const {
  check_index(j);
  // c_0 = 1, c_1 = alpha_j, c_2 = 0 for the rank-2 bundle C + gamma^{alpha_j}.
  const std::vector<CohomologyClass> chern{CohomologyClass::unit(), alphas_[j - 1], CohomologyClass{}};
  const CohomologyClass one_minus_x = CohomologyClass::unit() - CohomologyClass::generator(j);
  constexpr unsigned rank = 2;
  CohomologyClass total;
  for (unsigned i = 0; i <= rank; ++i) total += mul(power(one_minus_x, rank - i), chern[i]);
  return total;
}

CohomologyClass BottRing::chern_fiber_c1(int j) const {
  const CohomologyClass total = fiber_total_chern_class(j);
  if (!total.component(4).is_zero())
    throw InvariantViolation("fiber Chern class has nonzero degree-4 part " + total.component(4).to_string());
  return total.component(2);
}

std::vector<Monomial> BottRing::basis(int k) const {
  std::vector<Monomial> out;
  if (k < 0 || k > n()) return out;
  // Index combinations in lexicographic order coincide with term order.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(Monomial::from_indices(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n() - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

void BottRing::clear_cache() const {
  std::unique_lock lock(cache_->mutex);
  cache_->table.clear();
}

std::size_t BottRing::cache_size() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->table.size();
}

}  // namespace bott
