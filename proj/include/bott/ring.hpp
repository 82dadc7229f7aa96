#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology_class.hpp"

namespace bott {

/// Which squared generator reduce_monomial rewrites first.
enum class RewriteOrder { HighestFirst, LowestFirst, Random };

/// The graded ring H*(B_n) = Z[x_1..x_n] / (x_j^2 = alpha_j x_j).
///
/// A ring is logically immutable. Products of square-free monomials are
/// memoized in a cache shared between copies; the cache is safe for
/// concurrent readers and writers.
class BottRing {
 public:
  explicit BottRing(BottMatrix matrix);

  const BottMatrix& matrix() const { return matrix_; }
  int n() const { return matrix_.n(); }

  /// alpha_j = sum_{i<j} A^i_j x_i (1-based j). alpha_1 is always zero.
  const CohomologyClass& alpha(int j) const;

  /// x_j; throws InputError when j is outside 1..n.
  CohomologyClass generator(int j) const;

  /// Normalized product. Throws InputError if either class mentions an index
  /// above n, OverflowError on coefficient overflow.
  CohomologyClass mul(const CohomologyClass& a, const CohomologyClass& b) const;

  CohomologyClass square(const CohomologyClass& a) const { return mul(a, a); }

  /// c^k, with c^0 = 1.
  CohomologyClass power(const CohomologyClass& c, unsigned k) const;

  /// Normal form of the product of two square-free monomials (memoized).
  CohomologyClass mul_monomials(Monomial a, Monomial b) const;

  /// Normal form of the raw monomial prod x_j^{exponents[j-1]}, computed by
  /// direct rewriting x_j^2 -> alpha_j x_j without the product cache. The
  /// order only affects the path taken; the result is unique. seed drives
  /// RewriteOrder::Random.
  CohomologyClass reduce_monomial(std::span<const int> exponents,
                                  RewriteOrder order = RewriteOrder::HighestFirst,
                                  std::uint64_t seed = 0) const;

  /// Coefficient of x_1 x_2 ... x_n.
  Coeff top_coefficient(const CohomologyClass& c) const;

  /// Total Chern class of the tangent bundle along the fibers of stage j,
  /// sum_{i=0}^{2} (1 - x_j)^{2-i} c_i(C + gamma^{alpha_j}), normalized.
  CohomologyClass fiber_total_chern_class(int j) const;

  /// Degree-2 part of fiber_total_chern_class(j); equals alpha_j - 2 x_j.
  CohomologyClass chern_fiber_c1(int j) const;

  /// Square-free monomials of size k in term order; they form a Z-basis of
  /// the degree-2k component.
  std::vector<Monomial> basis(int k) const;

  void clear_cache() const;
  std::size_t cache_size() const;

 private:
  struct ProductCache;

  void check_index(int j) const;
  void check_fits(const CohomologyClass& c) const;

  BottMatrix matrix_;
  std::vector<CohomologyClass> alphas_;
  std::shared_ptr<ProductCache> cache_;
};

}  // namespace bott
