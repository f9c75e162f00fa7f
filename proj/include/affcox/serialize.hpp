#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "affcox/case_tables.hpp"
#include "affcox/classification.hpp"
#include "affcox/conjugacy.hpp"

namespace affcox {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(NodeSet s);
Json to_json(const IntMatrix& m);
Json root_system_to_json(const RootSystem& rs);
Json group_to_json(const AffineWeylGroup& g);
Json finite_element_to_json(const FiniteWeylGroup& w0, const FiniteWeylElement& f);
Json element_to_json(const AffineWeylGroup& g, const AffineElement& x);
Json class_report_to_json(const AffineWeylGroup& g, const ClassReport& r);
Json entry_to_json(const CaseEntry& e);
CaseEntry entry_from_json(const Json& j);
Json entry_checks_to_json(const EntryChecks& c);
Json coinvariant_to_json(const CoinvariantGroup& c);
Json lattice_report_to_json(const FiniteWeylGroup& w0, const LatticeIdentityReport& r);

/// FNV-1a 64 of the compact dump, as "fnv1a64:<16 hex digits>".
std::string checksum(const Json& j);

}  // namespace affcox
