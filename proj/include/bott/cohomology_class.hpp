#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bott/checked.hpp"
#include "bott/monomial.hpp"

namespace bott {

/// An integer combination of square-free monomials: the normal form of an
/// element of H*(B_n). Zero coefficients are never stored, so the zero class
/// has an empty term map.
///
/// A class does not carry its ring. Products go through BottRing::mul, which
/// checks that every index fits the ring's height.
class CohomologyClass {
 public:
  using Terms = std::map<Monomial, Coeff>;

  CohomologyClass() = default;

  static CohomologyClass unit() { return term(Monomial{}, 1); }
  static CohomologyClass generator(int j, Coeff coeff = 1) { return term(Monomial::generator(j), coeff); }
  static CohomologyClass term(Monomial m, Coeff coeff);

  /// The degree-2 class sum_i coeffs[i-1] x_i.
  static CohomologyClass linear(std::span<const Coeff> coeffs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(Monomial m) const;

  /// Add coeff * m in place, dropping the term if it cancels.
  void add_term(Monomial m, Coeff coeff);

  /// Degree 2k when nonzero and every monomial has size k; nullopt for the
  /// zero class and for inhomogeneous classes.
  std::optional<int> degree() const;

  /// True when every monomial has size deg / 2 (vacuously true for zero).
  bool is_homogeneous_of(int deg) const;

  /// The component of degree deg.
  CohomologyClass component(int deg) const;

  /// Largest generator index appearing in any term, 0 for constants/zero.
  int max_index() const;

  /// Coefficient vector (x_1..x_n) of a class of degree 2. Throws InputError
  /// if the class has a term of another degree or an index above n.
  std::vector<Coeff> linear_coefficients(int n) const;

  CohomologyClass& operator+=(const CohomologyClass& other);
  CohomologyClass& operator-=(const CohomologyClass& other);
  CohomologyClass& operator*=(Coeff scalar);

  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(Coeff s, CohomologyClass a) { return a *= s; }
  friend CohomologyClass operator*(CohomologyClass a, Coeff s) { return a *= s; }
  friend CohomologyClass operator-(CohomologyClass a) { return a *= -1; }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

  /// Human-readable form such as "-x_1 + 2x_2" or "x_1x_2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// sum_i coeffs[i] * classes[i]. Throws InputError on a length mismatch.
CohomologyClass linear_combine(std::span<const Coeff> coeffs, std::span<const CohomologyClass> classes);

/// Reduction of a class modulo 2: the set of monomials with odd coefficient.
class Mod2Class {
 public:
  Mod2Class() = default;
  explicit Mod2Class(std::vector<Monomial> support);

  const std::vector<Monomial>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  /// Lift to an integer class with all coefficients 1.
  CohomologyClass lift() const;

  friend bool operator==(const Mod2Class&, const Mod2Class&) = default;
  friend bool operator<(const Mod2Class& a, const Mod2Class& b) { return a.support_ < b.support_; }

 private:
  std::vector<Monomial> support_;  // sorted in term order
};

Mod2Class mod2_reduce(const CohomologyClass& c);

/// gcd of the coefficients of a nonzero degree-2 class equals 1. Throws
/// InputError for the zero class or a class that is not of degree 2.
bool is_primitive(const CohomologyClass& c);

/// Flip the sign so that the coefficient of the highest-index generator is
/// positive. Only meaningful for degree-2 classes; zero stays zero.
CohomologyClass canonical_sign(const CohomologyClass& c);

}  // namespace bott
