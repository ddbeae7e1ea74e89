#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidcong/congruence.hpp"

namespace braidcong {

std::string library_version();

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> claims;  // ids or id suffixes; empty selects every claim
  std::size_t element_cap = kDefaultElementCap;
  std::size_t max_index = kDefaultMaxIndex;
};

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;
  ClaimStatus status = ClaimStatus::skipped;
  std::string computed;
  std::string expected;
  std::string note;  // failure detail or skip reason
  double runtime_ms = 0;
};

struct VerificationReport {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;  // sorted by id

  bool ok() const;
  std::size_t count(ClaimStatus s) const;

  // Runtimes go into a separate "timing" block; with include_timing = false
  // the output depends only on the config.
  std::string to_json(bool include_timing = true) const;
  std::string to_table() const;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};

std::vector<ClaimInfo> registered_claims();

// Throws std::invalid_argument for a filter entry matching no claim.
VerificationReport run_suite(SuiteConfig const& config);

}  // namespace braidcong
