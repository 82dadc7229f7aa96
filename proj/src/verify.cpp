#include "bott/verify.hpp"

#include <algorithm>
#include <set>

#include "bott/autgroup.hpp"
#include "bott/census.hpp"
#include "bott/classify.hpp"
#include "bott/error.hpp"
#include "bott/json_io.hpp"
#include "bott/oracle.hpp"

namespace bott {
namespace {

using Json = nlohmann::json;
namespace bj = bott::json;

std::vector<BottMatrix> family(const VerifyOptions& o) {
  if (o.matrix) return {*o.matrix};
  std::vector<BottMatrix> out;
  for (int n = 1; n <= o.max_n; ++n) {
    const std::uint64_t total = census_size(n, o.entry_bound, o.max_enumeration);
    for (std::uint64_t k = 0; k < total; ++k) out.push_back(census_matrix(n, o.entry_bound, k));
  }
  return out;
}

std::set<std::vector<Coeff>> as_vectors(const std::vector<CohomologyClass>& classes, int n) {
  std::set<std::vector<Coeff>> out;
  for (const auto& c : classes) out.insert(c.linear_coefficients(n));
  return out;
}

Json class_list(const std::vector<CohomologyClass>& classes) {
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(c.to_string());
  return arr;
}

VerificationReport square_zero(const VerifyOptions& o) {
  VerificationReport r;
  r.check = "square-zero";
  const int requested = o.box.value_or(6);
  for (const auto& m : family(o)) {
    // 2x_j - alpha_j needs a box of at least max(2, max |A|).
    const int box = std::max<int>(requested, static_cast<int>(std::max<Coeff>(2, m.max_abs_entry())));
    const BottRing ring(m);
    std::vector<CohomologyClass> closed;
    for (const auto& f : square_zero_primitives(ring)) closed.push_back(canonical_sign(f.element));
    const auto brute = brute_square_zero(ring, box);
    ++r.instances;
    if (as_vectors(closed, m.n()) != as_vectors(brute, m.n()))
      r.violations.push_back(
          {{"matrix", bj::from_matrix(m)}, {"closed_form", class_list(closed)}, {"brute_force", class_list(brute)}});
  }
  r.details["box"] = requested;
  return r;
}

VerificationReport vanishing_pairs(const VerifyOptions& o) {
  VerificationReport r;
  r.check = "vanishing-pairs";
  const int box = o.box.value_or(2);
  std::uint64_t pairs = 0;
  for (const auto& m : family(o)) {
    const BottRing ring(m);
    const auto scan = brute_vanishing_pairs(ring, box);
    ++r.instances;
    pairs += scan.matched.size() + scan.violations.size();
    for (const auto& p : scan.violations)
      r.violations.push_back({{"matrix", bj::from_matrix(m)}, {"z", p.z.to_string()}, {"zbar", p.zbar.to_string()}});
  }
  r.details["box"] = box;
  r.details["pairs"] = pairs;
  return r;
}

VerificationReport iso_witness(const VerifyOptions& o) {
  VerificationReport r;
  r.check = "iso-witness";
  const int box = o.box.value_or(3);
  std::vector<BottRing> rings;
  for (const auto& m : family(o)) {
    BottRing ring(m);
    if (is_q_trivial(ring)) rings.push_back(std::move(ring));
  }
  std::uint64_t isomorphic = 0;
  for (std::size_t p = 0; p < rings.size(); ++p)
    for (std::size_t q = p; q < rings.size(); ++q) {
      if (rings[p].n() != rings[q].n()) continue;
      ++r.instances;
      const bool same = partition_invariant(rings[p]) == partition_invariant(rings[q]);
      const auto witness = brute_iso_search(rings[p], rings[q], box, o.max_enumeration);
      if (same) ++isomorphic;
      if (same != witness.has_value() || (witness && !verify_iso_witness(rings[p], rings[q], *witness)))
        r.violations.push_back({{"a", bj::from_matrix(rings[p].matrix())},
                                {"b", bj::from_matrix(rings[q].matrix())},
                                {"partitions_equal", same},
                                {"witness_found", witness.has_value()}});
    }
  r.details["box"] = box;
  r.details["isomorphic_pairs"] = isomorphic;
  return r;
}

VerificationReport betti(const VerifyOptions& o) {
  VerificationReport r;
  r.check = "betti";
  Json profiles = Json::object();
  for (const auto& m : family(o)) {
    const BottRing ring(m);
    const auto profile = betti_profile(ring);
    std::vector<Coeff> expected{1};
    for (int k = 1; k <= m.n(); ++k) expected.push_back(expected.back() * (m.n() - k + 1) / k);
    ++r.instances;
    if (profile != expected)
      r.violations.push_back({{"matrix", bj::from_matrix(m)}, {"profile", profile}, {"expected", expected}});
    profiles[std::to_string(m.n())] = profile;
  }
  r.details["profiles"] = std::move(profiles);
  return r;
}

VerificationReport aut_closure(const VerifyOptions& o) {
  VerificationReport r;
  r.check = "aut-closure";
  const int top = o.matrix ? o.matrix->n() : o.max_n;
  Json orders = Json::object();
  for (int n = 1; n <= top; ++n) {
    const BottRing ring(canonical_model(Partition({n})));
    const auto elems = enumerate_automorphisms(n, o.max_enumeration);
    ++r.instances;
    orders[std::to_string(n)] = elems.size();
    auto fail = [&](const std::string& what) { r.violations.push_back({{"n", n}, {"failure", what}}); };

    if (static_cast<Coeff>(elems.size()) != aut_order(Partition({n}))) fail("group order");
    std::set<std::vector<Coeff>> matrices;
    for (const auto& e : elems) matrices.insert(e.matrix.row_major());
    if (matrices.size() != elems.size()) fail("duplicate elements");

    std::set<std::vector<Coeff>> generators;
    for (int i = 1; i <= n; ++i) {
      generators.insert(square_zero_generator(i).linear_coefficients(n));
      generators.insert((-square_zero_generator(i)).linear_coefficients(n));
    }
    const Mod2Class x1 = mod2_reduce(CohomologyClass::generator(1));
    for (const auto& e : elems) {
      if (!is_ring_automorphism(ring, e.matrix)) fail("relation check");
      if (!matrices.count(inverse(e).matrix.row_major())) fail("inverse not in group");
      for (int i = 1; i <= n; ++i) {
        const auto image = e.matrix.apply(square_zero_generator(i).linear_coefficients(n));
        if (!generators.count(image)) fail("does not permute +-g_i");
        if (mod2_reduce(CohomologyClass::linear(image)) != x1) fail("mod-2 class of x_1 not fixed");
      }
    }
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (!matrices.count(compose(a, b).matrix.row_major())) {
          fail("not closed under composition");
          break;
        }
  }
  r.details["orders"] = std::move(orders);
  return r;
}

}  // namespace

Json VerificationReport::to_json() const {
  Json out = details;
  out["check"] = check;
  out["instances"] = instances;
  out["violations"] = violations;
  out["passed"] = passed();
  return out;
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"square-zero", "vanishing-pairs", "iso-witness", "betti", "aut-closure"};
  return names;
}

VerificationReport run_verification(const std::string& suite, const VerifyOptions& options) {
  if (suite == "square-zero") return square_zero(options);
  if (suite == "vanishing-pairs") return vanishing_pairs(options);
  if (suite == "iso-witness") return iso_witness(options);
  if (suite == "betti") return betti(options);
  if (suite == "aut-closure") return aut_closure(options);
  throw InputError("unknown verification suite '" + suite + "'");
}

}  // namespace bott
