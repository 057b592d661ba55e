#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biextra/group.hpp"

namespace biextra {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct AxiomReport {
  std::string group_name;
  std::vector<CheckResult> checks;

  bool all_passed() const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

// Definitional checks on a constructed group: Z(Q) is a four-group forming
// the natural L-module, Q/Z(Q) is elementary abelian of order 2^{2m}, Q is
// special, s acts fixed-point-freely, and the S3 relations hold as maps.
// Exhaustive where affordable, seeded sampling above rank 4.
AxiomReport verify_axioms(const Group& g, std::uint64_t seed = 0);

enum class SuiteStatus { pass, fail, skip };

struct SuiteResult {
  std::string section;
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::string detail;
  double seconds = 0.0;

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct SuiteReport {
  int rank = 2;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> results;

  bool all_passed() const;  // skips count as passed

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// The full property catalog for both types at the given rank, one result per
// check, with timings. The automorphism section is skipped above rank 4.
SuiteReport verify_suite(int rank, std::uint64_t seed = 0);

}  // namespace biextra
