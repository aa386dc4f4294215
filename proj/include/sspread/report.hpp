#pragma once

// JSON reports. Key order is fixed, floats carry 17 significant digits and
// non-finite values are written as null.

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sspread/harness.hpp"

namespace sspread {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view library_version = "0.1.0";
inline constexpr int report_schema = 1;

Json versions();
std::string hex64(std::uint64_t v);

Json to_json(const SpreadSeq& s);
Json to_json(const TwoSidedSeq& s);
Json to_json(const MajorizationReport& r);
/// The per-check record: ineq_id, holds, margins, worst_k, tail_verdict and
/// the supporting detail.
Json to_json(const Verdict& v);
Json to_json(const FuzzSummary& s);
Json to_json(const ReproReport& r);
Json to_json(const PropertyReport& r);

std::string dump(const Json& j);
/// Plain-text rendering of a report for terminals.
std::string render_text(const Json& j);

}  // namespace sspread
