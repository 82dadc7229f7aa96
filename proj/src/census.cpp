#include "bott/census.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

#include "bott/classify.hpp"
#include "bott/error.hpp"
#include "bott/json_io.hpp"

namespace bott {

bool CensusSummary::within_partitions_of_n() const {
  return std::all_of(histogram.begin(), histogram.end(), [&](const auto& kv) { return kv.first.n() == n; });
}

std::uint64_t census_size(int n, int bound, std::uint64_t max_enumeration) {
  if (n < 1) throw InputError("census: n must be positive");
  if (bound < 0) throw InputError("census: bound must be non-negative");
  const auto side = static_cast<std::uint64_t>(2 * static_cast<std::int64_t>(bound) + 1);
  const int slots = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (int k = 0; k < slots; ++k) {
    if (total > max_enumeration / side)
      throw GuardExceeded("census of (" + std::to_string(side) + ")^" + std::to_string(slots) +
                          " matrices exceeds --max-enumeration " + std::to_string(max_enumeration));
    total *= side;
  }
  if (total > max_enumeration)
    throw GuardExceeded("census size exceeds --max-enumeration " + std::to_string(max_enumeration));
  return total;
}

BottMatrix census_matrix(int n, int bound, std::uint64_t index) {
  BottMatrix m(n);
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  // Last slot is the least significant digit.
  for (int i = n - 1; i >= 1; --i)
    for (int j = n; j > i; --j) {
      m.set(i, j, static_cast<Coeff>(index % side) - bound);
      index /= side;
    }
  return m;
}

CensusRecord census_record(const BottMatrix& m) {
  const BottRing ring(m);
  const auto report = classify(ring);
  return {m, report.q_trivial, report.partition, report.square_zero_count};
}

CensusSummary run_census(int n, int bound, const std::function<void(const CensusRecord&)>& sink,
                         std::uint64_t max_enumeration, unsigned threads) {
  const std::uint64_t total = census_size(n, bound, max_enumeration);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  CensusSummary summary;
  summary.n = n;
  summary.bound = bound;

  constexpr std::uint64_t kChunk = 4096;
  for (std::uint64_t start = 0; start < total; start += kChunk) {
    const std::uint64_t end = std::min(total, start + kChunk);
    const std::uint64_t per = (end - start + threads - 1) / threads;
    std::vector<std::future<std::vector<CensusRecord>>> parts;
    for (std::uint64_t lo = start; lo < end; lo += per) {
      const std::uint64_t hi = std::min(end, lo + per);
      parts.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [=] {
        std::vector<CensusRecord> out;
        out.reserve(hi - lo);
        for (std::uint64_t k = lo; k < hi; ++k) out.push_back(census_record(census_matrix(n, bound, k)));
        return out;
      }));
    }
    for (auto& part : parts)
      for (const auto& rec : part.get()) {
        ++summary.matrices;
        if (rec.q_trivial) {
          ++summary.q_trivial;
          ++summary.histogram[*rec.partition];
        }
        sink(rec);
      }
  }
  return summary;
}

namespace json {

nlohmann::json from_census_record(const CensusRecord& r) {
  return {{"matrix", from_matrix(r.matrix)},
          {"q_trivial", r.q_trivial},
          {"partition", r.partition ? from_partition(*r.partition) : nlohmann::json(nullptr)},
          {"square_zero_count", r.square_zero_count}};
}

nlohmann::json from_census_summary(const CensusSummary& s) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [p, count] : s.histogram) hist.push_back({{"partition", p.parts()}, {"count", count}});
  return {{"n", s.n},
          {"bound", s.bound},
          {"matrices", s.matrices},
          {"q_trivial", s.q_trivial},
          {"distinct_partitions", s.histogram.size()},
          {"partitions_of_n", partitions_of(s.n).size()},
          {"within_partitions_of_n", s.within_partitions_of_n()},
          {"histogram", std::move(hist)}};
}

}  // namespace json
}  // namespace bott
