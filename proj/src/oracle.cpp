#include "bott/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "bott/error.hpp"
#include "bott/ring_map.hpp"

namespace bott {
namespace {

using Vec = std::vector<Coeff>;

// Products of degree-2 classes as dense vectors over the degree-4 basis
// {x_p x_q : p < q}, built once from the ring's generator products.
class QuadraticTable {
 public:
  explicit QuadraticTable(const BottRing& ring) : n_(ring.n()) {
    const auto quad = ring.basis(2);
    for (std::size_t k = 0; k < quad.size(); ++k) slot_.emplace(quad[k].bits(), k);
    dim_ = quad.size();
    table_.resize(static_cast<std::size_t>(n_ * n_));
    for (int i = 1; i <= n_; ++i)
      for (int k = 1; k <= n_; ++k) {
        auto& entry = table_[(i - 1) * n_ + (k - 1)];
        const CohomologyClass prod = ring.mul_monomials(Monomial::generator(i), Monomial::generator(k));
        for (const auto& [m, c] : prod.terms())
          entry.emplace_back(slot_.at(m.bits()), c);
      }
  }

  Vec product(const Vec& u, const Vec& v) const {
    Vec out(dim_, 0);
    for (int i = 0; i < n_; ++i) {
      if (u[i] == 0) continue;
      for (int k = 0; k < n_; ++k) {
        if (v[k] == 0) continue;
        const Coeff s = checked::mul(u[i], v[k]);
        for (auto [slot, c] : table_[i * n_ + k]) out[slot] = checked::add(out[slot], checked::mul(s, c));
      }
    }
    return out;
  }

  static bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
  }

 private:
  int n_;
  std::size_t dim_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> slot_;
  std::vector<std::vector<std::pair<std::size_t, Coeff>>> table_;
};

bool primitive_vec(const Vec& v) {
  Coeff g = 0;
  for (Coeff c : v) g = checked::gcd(g, c);
  return g == 1;
}

bool canonical_vec(const Vec& v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (*it != 0) return *it > 0;
  return false;
}

Coeff l1(const Vec& v) {
  Coeff s = 0;
  for (Coeff c : v) s = checked::add(s, checked::abs(c));
  return s;
}

std::uint64_t box_size(int n, int bound, std::uint64_t cap) {
  if (bound < 1) throw InputError("search bound must be positive, got " + std::to_string(bound));
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / side) throw GuardExceeded("search box (" + std::to_string(side) + ")^" + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    total *= side;
  }
  return total;
}

// All vectors of [-bound, bound]^n, odometer order.
std::vector<Vec> box_vectors(int n, int bound, std::uint64_t cap) {
  const std::uint64_t total = box_size(n, bound, cap);
  std::vector<Vec> out;
  out.reserve(total);
  Vec v(static_cast<std::size_t>(n), -bound);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

std::vector<Vec> canonical_primitives(int n, int bound) {
  std::vector<Vec> out;
  for (auto& v : box_vectors(n, bound, kDefaultMaxCandidates))
    if (canonical_vec(v) && primitive_vec(v)) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const Vec& x, const Vec& y) {
    const int hx = static_cast<int>(std::find_if(x.rbegin(), x.rend(), [](Coeff c) { return c != 0; }) - x.rbegin());
    const int hy = static_cast<int>(std::find_if(y.rbegin(), y.rend(), [](Coeff c) { return c != 0; }) - y.rbegin());
    if (hx != hy) return hx > hy;  // smaller leading index first
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const BottRing& a, const BottRing& b, int bound, std::uint64_t max_candidates)
      : a_(a), b_(b), table_(b), n_(a.n()) {
    if (a.n() != b.n())
      throw InputError("isomorphism search between rings of heights " + std::to_string(a.n()) + " and " +
                       std::to_string(b.n()));
    auto all = box_vectors(n_, bound, max_candidates);
    std::erase_if(all, [](const Vec& v) { return !primitive_vec(v); });
    // Column j prefers short vectors, then vectors close to e_j, so the
    // identity is tried first when A = B.
    for (int j = 0; j < n_; ++j) {
      auto dist = [j](const Vec& v) {
        Coeff d = 0;
        for (std::size_t i = 0; i < v.size(); ++i) d += checked::abs(v[i] - (static_cast<int>(i) == j ? 1 : 0));
        return d;
      };
      auto col = all;
      std::stable_sort(col.begin(), col.end(), [&](const Vec& x, const Vec& y) {
        const Coeff nx = l1(x), ny = l1(y);
        if (nx != ny) return nx < ny;
        const Coeff dx = dist(x), dy = dist(y);
        if (dx != dy) return dx < dy;
        return std::lexicographical_compare(y.rbegin(), y.rend(), x.rbegin(), x.rend());
      });
      candidates_.push_back(std::move(col));
    }
  }

  void run(const std::function<bool(const IntMatrix&)>& visit) {
    cols_.assign(static_cast<std::size_t>(n_), Vec{});
    visit_ = &visit;
    dfs(0);
  }

 private:
  // Returns false when the visitor asked to stop.
  bool dfs(int j) {
    if (j == n_) {
      const IntMatrix m = IntMatrix::from_columns(cols_);
      const Coeff det = determinant(m);
      if (det != 1 && det != -1) return true;
      return (*visit_)(m);
    }
    // phi(alpha_j) = sum_{i<j} A^i_j phi(x_i)
    Vec image_alpha(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < j; ++i) {
      const Coeff c = a_.matrix().entry(i + 1, j + 1);
      if (c == 0) continue;
      for (int r = 0; r < n_; ++r) image_alpha[r] = checked::add(image_alpha[r], checked::mul(c, cols_[i][r]));
    }
    for (const Vec& cand : candidates_[j]) {
      const Vec lhs = table_.product(cand, cand);
      const Vec rhs = table_.product(image_alpha, cand);
      if (lhs != rhs) continue;
      cols_[j] = cand;
      if (!dfs(j + 1)) return false;
    }
    return true;
  }

  const BottRing& a_;
  const BottRing& b_;
  QuadraticTable table_;
  int n_;
  std::vector<std::vector<Vec>> candidates_;
  std::vector<Vec> cols_;
  const std::function<bool(const IntMatrix&)>* visit_ = nullptr;
};

Coeff rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].num() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].num() == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<Coeff>(rank);
}

}  // namespace

std::vector<CohomologyClass> brute_square_zero(const BottRing& ring, int bound) {
  const QuadraticTable table(ring);
  std::vector<CohomologyClass> out;
  for (const Vec& v : canonical_primitives(ring.n(), bound))
    if (QuadraticTable::is_zero(table.product(v, v))) out.push_back(CohomologyClass::linear(v));
  return out;
}

bool witness_reconstructs(const BottRing& ring, const VanishingPair& pair, const VanishingPairWitness& w) {
  if (w.stage < 1 || w.stage > ring.n() || w.a == 0 || (w.sign != 1 && w.sign != -1)) return false;
  if (w.u.max_index() >= w.stage || !w.u.is_homogeneous_of(2)) return false;
  const CohomologyClass xj = ring.generator(w.stage);
  const CohomologyClass& alpha = ring.alpha(w.stage);
  const CohomologyClass z = w.a * xj + w.u;
  const CohomologyClass zbar = w.sign * (w.a * (xj - alpha) - w.u);
  if (z != pair.z || zbar != pair.zbar) return false;
  if (!ring.mul(z, zbar).is_zero()) return false;
  return ring.mul(w.u, w.u + w.a * alpha).is_zero();
}

std::optional<VanishingPairWitness> match_vanishing_pair(const BottRing& ring, const VanishingPair& pair) {
  const int j = pair.z.max_index();
  if (j == 0 || pair.zbar.max_index() != j) return std::nullopt;
  VanishingPairWitness w;
  w.stage = j;
  w.a = pair.z.coefficient(Monomial::generator(j));
  w.u = pair.z - CohomologyClass::generator(j, w.a);
  const CohomologyClass shape = w.a * (ring.generator(j) - ring.alpha(j)) - w.u;
  if (pair.zbar == shape)
    w.sign = 1;
  else if (pair.zbar == -shape)
    w.sign = -1;
  else
    return std::nullopt;
  if (!witness_reconstructs(ring, pair, w)) return std::nullopt;
  return w;
}

VanishingPairScan brute_vanishing_pairs(const BottRing& ring, int bound) {
  const QuadraticTable table(ring);
  const auto prims = canonical_primitives(ring.n(), bound);
  VanishingPairScan scan;
  for (std::size_t p = 0; p < prims.size(); ++p)
    for (std::size_t q = p; q < prims.size(); ++q) {
      if (!QuadraticTable::is_zero(table.product(prims[p], prims[q]))) continue;
      VanishingPair pair{CohomologyClass::linear(prims[p]), CohomologyClass::linear(prims[q])};
      if (auto w = match_vanishing_pair(ring, pair))
        scan.matched.emplace_back(std::move(pair), std::move(*w));
      else
        scan.violations.push_back(std::move(pair));
    }
  return scan;
}

bool verify_iso_witness(const BottRing& a, const BottRing& b, const IsoWitness& w) {
  if (w.matrix.n() != a.n() || a.n() != b.n()) return false;
  const Coeff det = determinant(w.matrix);
  if (det != 1 && det != -1) return false;
  if (!relations_preserved(a, b, w.matrix)) return false;
  return relations_preserved(b, a, inverse_unimodular(w.matrix));
}

std::optional<IsoWitness> brute_iso_search(const BottRing& a, const BottRing& b, int bound,
                                           std::uint64_t max_candidates) {
  IsoSearch search(a, b, bound, max_candidates);
  std::optional<IsoWitness> found;
  search.run([&](const IntMatrix& m) {
    found = IsoWitness{m};
    return false;
  });
  if (found && !verify_iso_witness(a, b, *found))
    throw InvariantViolation("isomorphism search produced a witness that does not verify");
  return found;
}

std::vector<IsoWitness> brute_isomorphisms(const BottRing& a, const BottRing& b, int bound,
                                           std::uint64_t max_candidates) {
  IsoSearch search(a, b, bound, max_candidates);
  std::vector<IsoWitness> out;
  search.run([&](const IntMatrix& m) {
    out.push_back(IsoWitness{m});
    return true;
  });
  return out;
}

std::vector<Coeff> betti_profile(const BottRing& ring) {
  const int n = ring.n();
  std::vector<Coeff> out;
  for (int k = 0; k <= n; ++k) {
    const auto basis = ring.basis(k);
    std::unordered_map<std::uint64_t, std::size_t> slot;
    for (std::size_t i = 0; i < basis.size(); ++i) slot.emplace(basis[i].bits(), i);

    std::vector<std::vector<Rational>> rows;
    // Exponent vectors of every product of k generators (with repetition).
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> walk = [&](int from, int left) {
      if (left == 0) {
        std::vector<Rational> row(basis.size());
        const CohomologyClass reduced = ring.reduce_monomial(exps);
        for (const auto& [m, c] : reduced.terms()) {
          auto it = slot.find(m.bits());
          if (it == slot.end())
            throw InvariantViolation("product of " + std::to_string(k) + " generators left degree " + std::to_string(2 * k));
          row[it->second] = Rational(c);
        }
        rows.push_back(std::move(row));
        return;
      }
      for (int i = from; i < n; ++i) {
        ++exps[i];
        walk(i, left - 1);
        --exps[i];
      }
    };
    walk(0, k);
    out.push_back(rational_rank(std::move(rows)));
  }
  return out;
}

}  // namespace bott
