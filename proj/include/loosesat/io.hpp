#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "loosesat/discharge.hpp"
#include "loosesat/hypergraph.hpp"
#include "loosesat/lemmas.hpp"
#include "loosesat/saturation.hpp"
#include "loosesat/search.hpp"

namespace loosesat {

using Json = nlohmann::ordered_json;

/// Version tag carried by every JSON report.
inline constexpr const char* kSchema = "loosesat/1";

/// .h3 text:
///   # comment
///   p h3 <n> <m>
///   e <a> <b> <c>      (m lines, 0-based vertex ids)
/// Throws ParseError for malformed lines and DomainError for invalid edges, both naming
/// the line.
Hypergraph3 parse_h3(std::string_view text);

/// Canonical text: header then edges in sorted order, ascending within a line.
std::string write_h3(const Hypergraph3& g);

/// File variants; I/O failures throw std::runtime_error.
Hypergraph3 read_h3_file(const std::filesystem::path& path);
void write_h3_file(const std::filesystem::path& path, const Hypergraph3& g);

/// Half-units as a decimal: 9 -> "4.5", -2 -> "-1".
std::string render_half_units(HalfUnits h);

Json to_json(const Triple& t);
Json to_json(const TriangleWitness& w);
Json to_json(const SaturationCertificate& cert);
Json to_json(const LemmaReport& report);
Json to_json(const AuditSummary& summary);
/// Full discharge report: summary, per-vertex charges and profiles, edge classes.
Json to_json(const ChargeReport& report);
/// Search outcome without timing; `witness` is written as an edge list.
Json to_json(const SearchOutcome& outcome);
/// Degree and codegree statistics.
Json stats_json(const Hypergraph3& g);

}  // namespace loosesat
