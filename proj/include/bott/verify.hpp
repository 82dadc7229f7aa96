#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bott/bott_matrix.hpp"

namespace bott {

/// Which rings a verification suite runs over: every matrix with
/// 1 <= n <= max_n and entries in [-entry_bound, entry_bound], or the single
/// matrix when one is given. box is the oracle's coefficient bound; each
/// suite has its own default.
struct VerifyOptions {
  int max_n = 3;
  int entry_bound = 1;
  std::optional<int> box;
  std::optional<BottMatrix> matrix;
  std::uint64_t max_enumeration = 10'000'000;
};

/// {"check": name, "instances": int, "violations": [...]} plus suite extras.
struct VerificationReport {
  std::string check;
  std::uint64_t instances = 0;
  std::vector<nlohmann::json> violations;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// square-zero, vanishing-pairs, iso-witness, betti, aut-closure
const std::vector<std::string>& verification_suites();

/// Throws InputError for an unknown suite name.
VerificationReport run_verification(const std::string& suite, const VerifyOptions& options);

}  // namespace bott
