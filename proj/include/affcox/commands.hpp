#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "affcox/serialize.hpp"

namespace affcox {

struct CommandOptions {
  std::string type;              // type letter; empty means every type (tables only)
  int rank = 0;                  // 0: unspecified
  std::string twist;             // empty: "id" (tables: every automorphism)
  std::optional<int> delta_pow;  // unset: every delta-power
  std::string tau;               // "", "all", "identity" or a minuscule node
  std::string rep;               // "", "from-table" or element text
  int conjugates = 10;
  int conj_length = 6;
  std::uint64_t seed = 1;
  std::size_t node_budget = 0;   // 0: default_node_budget()
  bool edges = false;
  int max_rank = 7;
  std::string fixture;           // tables: type-A fixture to compare against (or write)
  bool write_fixture = false;
  bool cross_check = false;      // tables: re-find every tabulated witness by search
};

struct CommandResult {
  Json json;
  std::string text;
  bool all_passed = false;
  bool partial = false;          // some closure ran out of budget
};

/// Each throws std::invalid_argument on scope or parse errors; check failures
/// are reported in the result, never thrown.
CommandResult run_verify(const CommandOptions& opts);
CommandResult run_min_elements(const CommandOptions& opts);
CommandResult run_tables(const CommandOptions& opts);
CommandResult run_classify(const CommandOptions& opts);

/// Derived untwisted type-A entries for ranks 1..max_rank, with checksum.
Json build_type_a_fixture(int max_rank);
/// Throws std::invalid_argument if the file is unreadable or its checksum is wrong.
Json load_type_a_fixture(const std::string& path);

}  // namespace affcox
