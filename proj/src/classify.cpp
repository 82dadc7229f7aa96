#include "bott/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bott/error.hpp"

namespace bott {
namespace {

bool all_even(const CohomologyClass& c) {
  return std::all_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return t.second % 2 == 0; });
}

CohomologyClass halve(const CohomologyClass& c) {
  CohomologyClass out;
  for (const auto& [m, coeff] : c.terms()) out.add_term(m, coeff / 2);
  return out;
}

}  // namespace

bool is_q_trivial(const BottRing& ring) {
  for (int j = 1; j <= ring.n(); ++j)
    if (!ring.square(ring.alpha(j)).is_zero()) return false;
  return true;
}

std::vector<SquareZeroForm> square_zero_primitives(const BottRing& ring) {
  std::vector<SquareZeroForm> out;
  for (int j = 1; j <= ring.n(); ++j) {
    const CohomologyClass& alpha = ring.alpha(j);
    if (!ring.square(alpha).is_zero()) continue;
    SquareZeroForm form;
    form.stage = j;
    if (all_even(alpha)) {
      form.parity = AlphaParity::Even;
      form.element = ring.generator(j) - halve(alpha);
    } else {
      form.parity = AlphaParity::Odd;
      form.element = 2 * ring.generator(j) - alpha;
    }
    form.mod2 = mod2_reduce(form.element);
    out.push_back(std::move(form));
  }
  return out;
}

Partition partition_invariant(const BottRing& ring) {
  const auto forms = square_zero_primitives(ring);
  if (static_cast<int>(forms.size()) != ring.n())
    throw DomainError("ring is not Q-trivial: only " + std::to_string(forms.size()) + " of " +
                      std::to_string(ring.n()) + " stages have alpha_j^2 = 0");
  std::map<Mod2Class, int> groups;
  for (const auto& f : forms) ++groups[f.mod2];
  std::vector<int> sizes;
  for (const auto& [cls, count] : groups) sizes.push_back(count);
  return Partition(std::move(sizes));
}

BottMatrix canonical_model(const Partition& p) {
  BottMatrix m(p.n());
  int offset = 0;
  for (int d : p.parts()) {
    for (int k = 2; k <= d; ++k) m.set(offset + 1, offset + k, 1);
    offset += d;
  }
  return m;
}

bool is_isomorphic(const BottRing& a, const BottRing& b) {
  if (!is_q_trivial(a) || !is_q_trivial(b))
    throw DomainError("is_isomorphic: the classification only covers Q-trivial rings");
  if (a.n() != b.n()) return false;
  return partition_invariant(a) == partition_invariant(b);
}

ClassificationReport classify(const BottRing& ring) {
  ClassificationReport report;
  const auto forms = square_zero_primitives(ring);
  report.square_zero_count = static_cast<int>(forms.size());
  report.q_trivial = report.square_zero_count == ring.n();
  if (report.q_trivial) report.partition = partition_invariant(ring);
  return report;
}

}  // namespace bott
