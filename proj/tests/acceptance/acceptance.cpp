// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bott/autgroup.hpp"
#include "bott/census.hpp"
#include "bott/classify.hpp"
#include "bott/error.hpp"
#include "bott/json_io.hpp"
#include "bott/oracle.hpp"
#include "bott/verify.hpp"
#include "cli.hpp"
#include "test_support.hpp"

using namespace bott;
using namespace bott::testing;
namespace bj = bott::json;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs >= limit_seconds) {
    o.ok = false;
    o.detail += " (over time limit)";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %d %s: %s [%.2fs / limit %.0fs]\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              limit_seconds);
  std::fflush(stdout);
}

std::vector<BottMatrix> family(int max_n, int bound) {
  std::vector<BottMatrix> out;
  for (int n = 1; n <= max_n; ++n)
    for (std::uint64_t k = 0; k < census_size(n, bound, 100'000'000); ++k) out.push_back(census_matrix(n, bound, k));
  return out;
}

Outcome hirzebruch_dichotomy() {
  int matches = 0;
  for (Coeff a = -9; a <= 9; ++a) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run({"classify", bj::from_matrix(hirzebruch(a)).dump()}, in, out, err);
    if (code != 0) continue;
    const auto doc = nlohmann::json::parse(out.str());
    const Partition expected = a % 2 != 0 ? Partition({2}) : Partition({1, 1});
    if (!doc["partition"].is_null() && bj::to_partition(doc["partition"]) == expected) ++matches;
  }
  return {matches == 19, std::to_string(matches) + "/19 exact matches"};
}

Outcome tower_classification() {
  int total = 0, ok = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      ++total;
      if (partition_invariant(BottRing(canonical_model(p))) == p) ++ok;
    }
  return {ok == total && total == 1 + 2 + 3 + 5 + 7 + 11 + 15, std::to_string(ok) + "/" + std::to_string(total)};
}

Outcome census_count() {
  auto distinct = [](int n) {
    std::set<Partition> seen;
    run_census(n, 1, [&](const CensusRecord& r) { if (r.partition) seen.insert(*r.partition); }, 100'000'000, 0);
    return seen;
  };
  const auto s3 = distinct(3);
  const auto s4 = distinct(4);
  const auto p4 = partitions_of(4);
  bool contained = true;
  for (const auto& p : s4) contained = contained && std::find(p4.begin(), p4.end(), p) != p4.end();
  bool required = true;
  for (const auto& p : {Partition({1, 1, 1, 1}), Partition({2, 1, 1}), Partition({3, 1}), Partition({4})})
    required = required && s4.count(p) == 1;
  return {s3.size() == 3 && contained && required && p4.size() == 5,
          "n=3: " + std::to_string(s3.size()) + " partitions; n=4: " + std::to_string(s4.size()) +
              " partitions, all within the 5 of n=4"};
}

Outcome square_zero_agreement() {
  int instances = 0, bad = 0;
  for (const auto& m : family(3, 2)) {
    const BottRing ring(m);
    std::vector<CohomologyClass> closed;
    for (const auto& f : square_zero_primitives(ring)) closed.push_back(f.element);
    ++instances;
    if (brute_square_zero(ring, 6) != closed) ++bad;
  }
  return {bad == 0, std::to_string(instances) + " rings, " + std::to_string(bad) + " discrepancies"};
}

Outcome vanishing_pairs() {
  int instances = 0;
  std::size_t pairs = 0, bad = 0;
  for (const auto& m : family(3, 1)) {
    const BottRing ring(m);
    const auto scan = brute_vanishing_pairs(ring, 2);
    ++instances;
    pairs += scan.matched.size() + scan.violations.size();
    bad += scan.violations.size();
    for (const auto& [p, w] : scan.matched)
      if (!witness_reconstructs(ring, p, w)) ++bad;
  }
  return {bad == 0 && pairs > 0, std::to_string(instances) + " rings, " + std::to_string(pairs) + " pairs, " +
                                     std::to_string(bad) + " violations"};
}

Outcome iso_oracle() {
  std::size_t pairs = 0, bad = 0, iso = 0;
  for (const auto& [n, bound] : {std::pair{2, 2}, std::pair{3, 1}}) {
    std::vector<BottRing> rings;
    for (std::uint64_t k = 0; k < census_size(n, bound, 100'000'000); ++k) {
      BottRing r(census_matrix(n, bound, k));
      if (is_q_trivial(r)) rings.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rings.size(); ++p)
      for (std::size_t q = 0; q < rings.size(); ++q) {
        ++pairs;
        const bool same = partition_invariant(rings[p]) == partition_invariant(rings[q]);
        const auto w = brute_iso_search(rings[p], rings[q], 3);
        iso += same;
        if (same != w.has_value() || (w && !verify_iso_witness(rings[p], rings[q], *w))) ++bad;
      }
  }
  return {bad == 0, std::to_string(pairs) + " ordered pairs (" + std::to_string(iso) + " isomorphic), " +
                        std::to_string(bad) + " mismatches"};
}

Outcome automorphisms() {
  const std::vector<std::size_t> expected{2, 8, 48, 384};
  bool ok = true;
  std::string counts;
  for (int n = 1; n <= 4; ++n) {
    const auto elems = enumerate_automorphisms(n);
    counts += (n > 1 ? "," : "") + std::to_string(elems.size());
    ok = ok && elems.size() == expected[static_cast<std::size_t>(n - 1)];
    const BottRing ring(tower_h(n));
    std::set<std::vector<Coeff>> set;
    for (const auto& e : elems) {
      set.insert(e.matrix.row_major());
      ok = ok && is_ring_automorphism(ring, e.matrix);
    }
    ok = ok && set.size() == elems.size();
    for (const auto& a : elems)
      for (const auto& b : elems) ok = ok && set.count(compose(a, b).matrix.row_major()) == 1;
  }
  ok = ok && aut_order(Partition({2})) == 8;

  std::set<std::vector<Coeff>> enumerated;
  for (const auto& e : enumerate_automorphisms(2)) enumerated.insert(e.matrix.row_major());
  const BottRing h2(tower_h(2));
  std::size_t found = 0, outside = 0;
  for (Coeff a = -3; a <= 3; ++a)
    for (Coeff b = -3; b <= 3; ++b)
      for (Coeff c = -3; c <= 3; ++c)
        for (Coeff d = -3; d <= 3; ++d) {
          const IntMatrix m(2, {a, b, c, d});
          if (!is_ring_automorphism(h2, m)) continue;
          ++found;
          outside += enumerated.count(m.row_major()) == 0;
        }
  ok = ok && found == 8 && outside == 0;
  return {ok, "orders " + counts + "; |Aut H_2| = " + std::to_string(aut_order(Partition({2}))) + "; box search found " +
                  std::to_string(found) + ", " + std::to_string(outside) + " outside"};
}

Outcome ring_properties() {
  std::mt19937_64 rng(20261015);
  std::size_t triples = 0, bad = 0;
  for (; triples < 12'000; ++triples) {
    const int n = 1 + static_cast<int>(triples % 5);
    const BottMatrix m = random_matrix(rng, n, 3);
    const BottRing ring(m);
    const auto a = random_class(rng, n, 10), b = random_class(rng, n, 10), c = random_class(rng, n, 10);
    if (ring.mul(a, b) != ring.mul(b, a)) ++bad;
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) ++bad;
    if (ring.mul(a, b + c) != ring.mul(a, b) + ring.mul(a, c)) ++bad;
    if (ring.mul(a, b) != naive_mul(m, a, b)) ++bad;

    std::vector<int> exps(static_cast<std::size_t>(n));
    for (auto& e : exps) e = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto high = ring.reduce_monomial(exps, RewriteOrder::HighestFirst);
    if (ring.reduce_monomial(exps, RewriteOrder::LowestFirst) != high) ++bad;
    if (ring.reduce_monomial(exps, RewriteOrder::Random, triples) != high) ++bad;

    for (int j = 1; j <= n; ++j)
      if (!ring.mul(ring.generator(j), ring.generator(j) - ring.alpha(j)).is_zero()) ++bad;
  }
  std::size_t betti_rings = 0;
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto profile = betti_profile(BottRing(random_matrix(rng, n, 3)));
      Coeff binom = 1;
      for (int k = 0; k <= n; ++k) {
        if (profile[static_cast<std::size_t>(k)] != binom) ++bad;
        binom = binom * (n - k) / (k + 1);
      }
      ++betti_rings;
    }
  return {bad == 0, std::to_string(triples) + " random triples, " + std::to_string(betti_rings) +
                        " betti profiles, " + std::to_string(bad) + " violations"};
}

Outcome chern() {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const BottRing ring(tower_h(n));
    ok = ok && ring.chern_fiber_c1(n) == x(1) - x(n, 2);
  }
  const BottRing neg(hirzebruch(-1));
  ok = ok && neg.chern_fiber_c1(2) == -x(1) - x(2, 2);
  const BottRing mixed(matrix(3, {{1, 2, 1}, {1, 3, -1}}));
  ok = ok && mixed.chern_fiber_c1(3) == -x(1) - x(3, 2);
  return {ok, ok ? "c1 = x_1 - 2x_n on H_n and -x_1 - 2x_j where alpha_j = -x_1" : "mismatch"};
}

}  // namespace

int main() {
  criterion(1, "Hirzebruch dichotomy", 1, hirzebruch_dichotomy);
  criterion(2, "canonical models round trip for n <= 7", 1, tower_classification);
  criterion(3, "census partition counts", 30, census_count);
  criterion(4, "square-zero closed form vs brute force", 120, square_zero_agreement);
  criterion(5, "vanishing pairs admit witnesses", 120, vanishing_pairs);
  criterion(6, "isomorphism oracle agrees with the invariant", 600, iso_oracle);
  criterion(7, "automorphism group of H_n", 60, automorphisms);
  criterion(8, "ring arithmetic properties", 60, ring_properties);
  criterion(9, "fiber Chern class", 1, chern);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
