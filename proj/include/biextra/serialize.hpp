#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "biextra/aut.hpp"
#include "biextra/classify.hpp"
#include "biextra/dent_space.hpp"
#include "biextra/group.hpp"
#include "biextra/verify.hpp"

// JSON encodings for every report type. All of them round-trip:
// from_json(to_json(x)) == x.

namespace biextra {

struct DentRecord {
  int index = 0;
  QElement x;
  bool singular = true;
  int q_value = 0;
  GF2Vector coords;

  friend bool operator==(const DentRecord&, const DentRecord&) = default;
};

struct DentTable {
  GroupDescriptor descriptor;
  std::vector<DentRecord> records;

  friend bool operator==(const DentTable&, const DentTable&) = default;
};

DentTable dent_table(const DentSpace& ds);

struct DecompositionReport {
  GroupDescriptor overall;
  std::vector<std::array<int, 3>> piece_dents;
  std::vector<GroupDescriptor> piece_types;

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

DecompositionReport decomposition_report(const Group& g, const std::vector<RankTwoPiece>& pieces);

void to_json(nlohmann::json& j, const GroupDescriptor& x);
void from_json(const nlohmann::json& j, GroupDescriptor& x);

void to_json(nlohmann::json& j, const QElement& x);
void from_json(const nlohmann::json& j, QElement& x);

void to_json(nlohmann::json& j, const DentRecord& x);
void from_json(const nlohmann::json& j, DentRecord& x);

void to_json(nlohmann::json& j, const DentTable& x);
void from_json(const nlohmann::json& j, DentTable& x);

void to_json(nlohmann::json& j, const DecompositionReport& x);
void from_json(const nlohmann::json& j, DecompositionReport& x);

void to_json(nlohmann::json& j, const IsomorphismCertificate& x);
void from_json(const nlohmann::json& j, IsomorphismCertificate& x);

void to_json(nlohmann::json& j, const OutReport& x);
void from_json(const nlohmann::json& j, OutReport& x);

void to_json(nlohmann::json& j, const Fingerprint& x);
void from_json(const nlohmann::json& j, Fingerprint& x);

void to_json(nlohmann::json& j, const CheckResult& x);
void from_json(const nlohmann::json& j, CheckResult& x);

void to_json(nlohmann::json& j, const AxiomReport& x);
void from_json(const nlohmann::json& j, AxiomReport& x);

void to_json(nlohmann::json& j, const SuiteResult& x);
void from_json(const nlohmann::json& j, SuiteResult& x);

void to_json(nlohmann::json& j, const SuiteReport& x);
void from_json(const nlohmann::json& j, SuiteReport& x);

}  // namespace biextra
