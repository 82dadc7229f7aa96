#include "bott/cohomology_class.hpp"

#include <algorithm>
#include <sstream>

#include "bott/error.hpp"

namespace bott {

Monomial Monomial::from_indices(std::span<const int> indices) {
  Monomial m;
  for (int j : indices) {
    if (j < 1 || j > kMaxHeight) throw InputError("monomial index " + std::to_string(j) + " out of range");
    if (m.contains(j)) throw InputError("monomial index " + std::to_string(j) + " repeated");
    m = m.with(j);
  }
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

CohomologyClass CohomologyClass::term(Monomial m, Coeff coeff) {
  CohomologyClass c;
  c.add_term(m, coeff);
  return c;
}

CohomologyClass CohomologyClass::linear(std::span<const Coeff> coeffs) {
  CohomologyClass c;
  for (std::size_t i = 0; i < coeffs.size(); ++i) c.add_term(Monomial::generator(static_cast<int>(i) + 1), coeffs[i]);
  return c;
}

Coeff CohomologyClass::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void CohomologyClass::add_term(Monomial m, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::optional<int> CohomologyClass::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int k = terms_.begin()->first.size();
  // Term order sorts by size first, so first and last bracket all sizes.
  if (terms_.rbegin()->first.size() != k) return std::nullopt;
  return 2 * k;
}

bool CohomologyClass::is_homogeneous_of(int deg) const {
  if (terms_.empty()) return true;
  if (deg % 2 != 0) return false;
  return degree() == deg;
}

CohomologyClass CohomologyClass::component(int deg) const {
  CohomologyClass out;
  if (deg % 2 != 0) return out;
  for (const auto& [m, c] : terms_)
    if (m.size() * 2 == deg) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

int CohomologyClass::max_index() const {
  int hi = 0;
  for (const auto& [m, c] : terms_) hi = std::max(hi, m.highest());
  return hi;
}

std::vector<Coeff> CohomologyClass::linear_coefficients(int n) const {
  std::vector<Coeff> out(static_cast<std::size_t>(n), 0);
  for (const auto& [m, c] : terms_) {
    if (m.size() != 1) throw InputError("expected a degree-2 class, got " + to_string());
    const int j = m.highest();
    if (j > n) throw InputError("class " + to_string() + " exceeds dimension " + std::to_string(n));
    out[j - 1] = c;
  }
  return out;
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked::neg(c));
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(Coeff scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = checked::mul(c, scalar);
  return *this;
}

std::string CohomologyClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coeff mag = c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag < 0) mag = checked::neg(mag);
    if (mag != 1 || m.empty()) os << mag;
    for (int j : m.indices()) os << "x_" << j;
    first = false;
  }
  return os.str();
}

CohomologyClass linear_combine(std::span<const Coeff> coeffs, std::span<const CohomologyClass> classes) {
  if (coeffs.size() != classes.size())
    throw InputError("linear_combine: " + std::to_string(coeffs.size()) + " coefficients for " +
                     std::to_string(classes.size()) + " classes");
  CohomologyClass out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (const auto& [m, c] : classes[i].terms()) out.add_term(m, checked::mul(coeffs[i], c));
  return out;
}

Mod2Class::Mod2Class(std::vector<Monomial> support) : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

CohomologyClass Mod2Class::lift() const {
  CohomologyClass out;
  for (Monomial m : support_) out.add_term(m, 1);
  return out;
}

Mod2Class mod2_reduce(const CohomologyClass& c) {
  std::vector<Monomial> odd;
  for (const auto& [m, coeff] : c.terms())
    if (coeff % 2 != 0) odd.push_back(m);
  return Mod2Class(std::move(odd));
}

bool is_primitive(const CohomologyClass& c) {
  if (c.is_zero()) throw InputError("is_primitive: zero class");
  if (c.degree() != 2) throw InputError("is_primitive: " + c.to_string() + " is not of degree 2");
  Coeff g = 0;
  for (const auto& [m, coeff] : c.terms()) g = checked::gcd(g, coeff);
  return g == 1;
}

CohomologyClass canonical_sign(const CohomologyClass& c) {
  if (c.is_zero() || c.terms().rbegin()->second > 0) return c;
  return -c;
}

}  // namespace bott
