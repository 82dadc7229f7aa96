#include "bott/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bott/classify.hpp"
#include "bott/error.hpp"
#include "bott/ring_map.hpp"

namespace bott {
namespace {

// Columns are g_1..g_n in the x-basis.
IntMatrix generator_matrix(int n) {
  IntMatrix g(n);
  g(0, 0) = 1;
  for (int i = 1; i < n; ++i) {
    g(i, i) = 2;
    g(0, i) = -1;
  }
  return g;
}

void check_signed_perm(int n, const std::vector<int>& perm, const std::vector<int>& signs) {
  if (n < 1) throw InputError("automorphism of height " + std::to_string(n));
  if (static_cast<int>(perm.size()) != n || static_cast<int>(signs.size()) != n)
    throw InputError("signed permutation needs " + std::to_string(n) + " images and signs");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 1 || p > n || hit[p - 1]) throw InputError("perm is not a bijection on 1.." + std::to_string(n));
    hit[p - 1] = true;
  }
  for (int s : signs)
    if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
}

std::uint64_t checked_count(int n, std::uint64_t max_enumeration) {
  if (n > kMaxAutEnumerationHeight)
    throw GuardExceeded("automorphism enumeration is limited to n <= " + std::to_string(kMaxAutEnumerationHeight));
  std::uint64_t count = std::uint64_t{1} << n;
  for (int k = 2; k <= n; ++k) count *= static_cast<std::uint64_t>(k);
  if (count > max_enumeration)
    throw GuardExceeded("enumeration of " + std::to_string(count) + " automorphisms exceeds the cap " +
                        std::to_string(max_enumeration));
  return count;
}

}  // namespace

CohomologyClass square_zero_generator(int i) {
  if (i == 1) return CohomologyClass::generator(1);
  return 2 * CohomologyClass::generator(i) - CohomologyClass::generator(1);
}

AutElement identity_automorphism(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  return {n, std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1), IntMatrix::identity(n)};
}

AutElement signed_perm_to_matrix(int n, std::vector<int> perm, std::vector<int> signs) {
  check_signed_perm(n, perm, signs);
  const IntMatrix g = generator_matrix(n);
  // phi G = G P where column i of P is signs[i] e_{perm(i)}.
  IntMatrix p(n);
  for (int i = 0; i < n; ++i) p(perm[i] - 1, i) = signs[i];
  const auto solved = solve_right(g, g * p);
  IntMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (!solved[r][c].is_integer())
        throw InvariantViolation("signed permutation induced a non-integral map: entry (" + std::to_string(r + 1) +
                                 ", " + std::to_string(c + 1) + ") = " + solved[r][c].to_string());
      m(r, c) = solved[r][c].num();
    }
  return {n, std::move(perm), std::move(signs), std::move(m)};
}

bool is_ring_automorphism(const BottRing& ring, const IntMatrix& m) {
  if (m.n() != ring.n())
    throw InputError("matrix is " + std::to_string(m.n()) + "x" + std::to_string(m.n()) + " but the ring has height " +
                     std::to_string(ring.n()));
  const Coeff det = determinant(m);
  if (det != 1 && det != -1) return false;
  return relations_preserved(ring, ring, m);
}

std::vector<AutElement> enumerate_automorphisms(int n, std::uint64_t max_enumeration) {
  if (n < 1) throw InputError("enumerate_automorphisms: n must be positive");
  const std::uint64_t count = checked_count(n, max_enumeration);
  std::vector<AutElement> out;
  out.reserve(count);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1U ? -1 : 1;
      out.push_back(signed_perm_to_matrix(n, perm, std::move(signs)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

AutElement compose(const AutElement& a, const AutElement& b) {
  if (a.n != b.n) throw InputError("compose: automorphisms of heights " + std::to_string(a.n) + " and " + std::to_string(b.n));
  const int n = a.n;
  AutElement out{n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n)),
                 a.matrix * b.matrix};
  for (int i = 0; i < n; ++i) {
    const int mid = b.perm[i];
    out.perm[i] = a.perm[mid - 1];
    out.signs[i] = b.signs[i] * a.signs[mid - 1];
  }
  return out;
}

AutElement inverse(const AutElement& a) {
  const int n = a.n;
  AutElement out{n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n)),
                 inverse_unimodular(a.matrix)};
  for (int i = 0; i < n; ++i) {
    // a(g_i) = s_i g_{p(i)}  =>  a^{-1}(g_{p(i)}) = s_i g_i
    out.perm[a.perm[i] - 1] = i + 1;
    out.signs[a.perm[i] - 1] = a.signs[i];
  }
  return out;
}

Coeff aut_order(const Partition& p) {
  Coeff order = 1;
  for (auto [d, a] : p.grouped()) {
    Coeff factor = checked::pow(2, static_cast<unsigned>(d));
    for (int k = 2; k <= d; ++k) factor = checked::mul(factor, k);
    order = checked::mul(order, checked::pow(factor, static_cast<unsigned>(a)));
    for (int k = 2; k <= a; ++k) order = checked::mul(order, k);
  }
  return order;
}

IntMatrix BlockAutElement::flatten() const {
  const auto& parts = partition.parts();
  const std::size_t blocks = parts.size();
  if (factors.size() != blocks || block_perm.size() != blocks)
    throw InputError("block automorphism needs one factor and one image per block");
  std::vector<int> offset(blocks, 0);
  for (std::size_t b = 1; b < blocks; ++b) offset[b] = offset[b - 1] + parts[b - 1];
  IntMatrix m(partition.n());
  for (std::size_t b = 0; b < blocks; ++b) {
    const int d = parts[b];
    const auto target = static_cast<std::size_t>(block_perm[b] - 1);
    if (target >= blocks || parts[target] != d || factors[b].n != d)
      throw InputError("block automorphism maps a block to one of a different size");
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m(offset[target] + r, offset[b] + c) = factors[b].matrix(r, c);
  }
  return m;
}

std::vector<BlockAutElement> enumerate_block_automorphisms(const Partition& p, std::uint64_t max_enumeration) {
  if (p.n() > kMaxAutEnumerationHeight)
    throw GuardExceeded("automorphism enumeration is limited to total height <= " +
                        std::to_string(kMaxAutEnumerationHeight));
  const Coeff total = aut_order(p);
  if (static_cast<std::uint64_t>(total) > max_enumeration)
    throw GuardExceeded("enumeration of " + std::to_string(total) + " automorphisms exceeds the cap " +
                        std::to_string(max_enumeration));

  const auto& parts = p.parts();
  const std::size_t blocks = parts.size();
  std::vector<std::vector<AutElement>> factor_choices(blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    factor_choices[b] = (b > 0 && parts[b] == parts[b - 1]) ? factor_choices[b - 1]
                                                             : enumerate_automorphisms(parts[b], max_enumeration);

  // Every block permutation that preserves sizes: permute within each run of
  // equal parts.
  std::vector<std::vector<int>> block_perms;
  {
    std::vector<int> perm(blocks);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t b = 0; b < blocks;) {
      std::size_t e = b;
      while (e < blocks && parts[e] == parts[b]) ++e;
      runs.emplace_back(b, e);
      b = e;
    }
    std::function<void(std::size_t)> walk = [&](std::size_t r) {
      if (r == runs.size()) {
        block_perms.push_back(perm);
        return;
      }
      auto [b, e] = runs[r];
      std::sort(perm.begin() + static_cast<std::ptrdiff_t>(b), perm.begin() + static_cast<std::ptrdiff_t>(e));
      do {
        walk(r + 1);
      } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(b), perm.begin() + static_cast<std::ptrdiff_t>(e)));
    };
    walk(0);
  }

  std::vector<BlockAutElement> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> pick(blocks, 0);
  for (const auto& bp : block_perms) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      BlockAutElement e{p, {}, bp};
      for (std::size_t b = 0; b < blocks; ++b) e.factors.push_back(factor_choices[b][pick[b]]);
      out.push_back(std::move(e));
      std::size_t b = 0;
      while (b < blocks && ++pick[b] == factor_choices[b].size()) pick[b++] = 0;
      if (b == blocks) break;
    }
  }
  return out;
}

}  // namespace bott
