#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chevalley {

struct VerifyCase {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;  // sorted by id
  double wall_seconds = 0;        // not part of the serialized data

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
  static VerifyReport from_json(const nlohmann::ordered_json& j);
};

/// minus_one, zrho, tits, kac, fs, purity, classification, all.
const std::vector<std::string>& suite_names();

/// Throws Error for an unknown suite name.
VerifyReport run_suite(const std::string& name);

/// Rows of the self-duality table for catalog forms of rank <= max_rank.
struct SelfDualRow {
  std::string name;
  std::string type;
  std::string lattice;
  std::string variant;
  bool equal_rank = false;
  bool minus_one = false;
  std::optional<bool> pure;  // equal rank with -1 in W only
  bool self_dual_all = false;
};

std::vector<SelfDualRow> selfdual_table(int max_rank);

}  // namespace chevalley
