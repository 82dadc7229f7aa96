#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// product cache or the library's rewriting loop.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology_class.hpp"
#include "bott/ring.hpp"

namespace bott::testing {

inline BottMatrix matrix(int n, std::vector<UpperEntry> entries) { return BottMatrix(n, entries); }

inline BottMatrix hirzebruch(Coeff a) { return matrix(2, {{1, 2, a}}); }

/// H_n: first row (0, 1, ..., 1).
inline BottMatrix tower_h(int n) {
  BottMatrix m(n);
  for (int j = 2; j <= n; ++j) m.set(1, j, 1);
  return m;
}

inline CohomologyClass x(int j, Coeff c = 1) { return CohomologyClass::generator(j, c); }

inline CohomologyClass mono(std::vector<int> idx, Coeff c = 1) {
  return CohomologyClass::term(Monomial::from_indices(idx), c);
}

inline BottMatrix random_matrix(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  BottMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.set(i, j, d(rng));
  return m;
}

/// Sparse class with up to max_terms random monomials of any degree.
inline CohomologyClass random_class(std::mt19937_64& rng, int n, int coeff_bound, int max_terms = 4) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> count(0, max_terms);
  CohomologyClass c;
  for (int k = count(rng); k > 0; --k) c.add_term(Monomial(bits(rng)), coeff(rng));
  return c;
}

inline CohomologyClass random_linear(std::mt19937_64& rng, int n, int coeff_bound) {
  std::uniform_int_distribution<Coeff> coeff(-coeff_bound, coeff_bound);
  std::vector<Coeff> v(static_cast<std::size_t>(n));
  for (auto& c : v) c = coeff(rng);
  return CohomologyClass::linear(v);
}

/// Polynomials over exponent vectors, multiplied naively.
using Poly = std::map<std::vector<int>, Coeff>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly poly_of(const CohomologyClass& c, int n) {
  Poly p;
  for (const auto& [m, coeff] : c.terms()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int j : m.indices()) e[j - 1] = 1;
    p[e] += coeff;
  }
  return p;
}

/// Independent normal form: eliminate x_n, x_{n-1}, ..., x_1 in turn with the
/// closed form x_j^e = alpha_j^{e-1} x_j (e >= 1). Eliminating x_j only
/// introduces lower indices, so one sweep from the top suffices.
inline CohomologyClass naive_normal_form(const BottMatrix& m, Poly p) {
  const int n = m.n();
  for (int j = n; j >= 1; --j) {
    Poly alpha;
    for (int i = 1; i < j; ++i)
      if (Coeff a = m.entry(i, j); a != 0) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[i - 1] = 1;
        alpha[e] = a;
      }
    Poly next;
    for (const auto& [e, c] : p) {
      if (e[j - 1] <= 1) {
        next[e] += c;
        continue;
      }
      std::vector<int> base = e;
      const int power = base[j - 1] - 1;
      base[j - 1] = 1;
      Poly acc{{base, c}};
      for (int k = 0; k < power; ++k) acc = poly_mul(acc, alpha);
      for (const auto& [ee, cc] : acc) next[ee] += cc;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    p = std::move(next);
  }
  CohomologyClass out;
  for (const auto& [e, c] : p) {
    Monomial mono;
    for (int j = 1; j <= n; ++j) {
      if (e[j - 1] > 1) throw std::logic_error("naive normal form left a square");
      if (e[j - 1] == 1) mono = mono.with(j);
    }
    out.add_term(mono, c);
  }
  return out;
}

inline CohomologyClass naive_mul(const BottMatrix& m, const CohomologyClass& a, const CohomologyClass& b) {
  return naive_normal_form(m, poly_mul(poly_of(a, m.n()), poly_of(b, m.n())));
}

/// Partitions of n by brute force: every composition (2^{n-1} cut patterns),
/// sorted descending, deduplicated.
inline std::set<std::vector<int>> brute_partitions(int n) {
  std::set<std::vector<int>> out;
  for (std::uint32_t cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if ((cuts >> k) & 1U) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

}  // namespace bott::testing
