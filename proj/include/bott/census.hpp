#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "json.hpp"

#include "bott/bott_matrix.hpp"
#include "bott/partition.hpp"

namespace bott {

struct CensusRecord {
  BottMatrix matrix;
  bool q_trivial = false;
  std::optional<Partition> partition;
  int square_zero_count = 0;
};

struct CensusSummary {
  int n = 0;
  int bound = 0;
  std::uint64_t matrices = 0;
  std::uint64_t q_trivial = 0;
  std::map<Partition, std::uint64_t> histogram;

  /// Whether every partition seen is a partition of n.
  bool within_partitions_of_n() const;
};

/// (2 bound + 1)^(n(n-1)/2); throws GuardExceeded above max_enumeration.
std::uint64_t census_size(int n, int bound, std::uint64_t max_enumeration);

/// The index-th matrix of the family, counting lexicographically over the
/// upper triangle read row by row with entries running -bound..bound.
BottMatrix census_matrix(int n, int bound, std::uint64_t index);

CensusRecord census_record(const BottMatrix& m);

/// Classify every matrix of the family. Records reach sink in enumeration
/// order whatever the number of worker threads (0 picks the hardware count).
CensusSummary run_census(int n, int bound, const std::function<void(const CensusRecord&)>& sink,
                         std::uint64_t max_enumeration, unsigned threads = 0);

namespace json {
nlohmann::json from_census_record(const CensusRecord& r);
nlohmann::json from_census_summary(const CensusSummary& s);
}  // namespace json

}  // namespace bott
