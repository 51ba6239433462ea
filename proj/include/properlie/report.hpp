#pragma once

// Run reports. Every report is first built as JSON; the text form is
// rendered from that JSON, so both carry the same decisions and evidence.

#include <map>
#include <string>

#include <json.hpp>

#include "properlie/checker.hpp"

namespace properlie {

using Json = nlohmann::ordered_json;

Json word_json(const std::vector<int>& word);  // 1-based reflection indices
Json vector_json(const RationalVector& v);      // exact rationals as strings

Json verdict_json(const EmbeddingPair& p, const Verdict& v);
Json two_plane_json(const RealForm& rf, const TwoPlaneReport& r);
Json form_row_json(const RealForm& rf);

// Wraps results with the tool version and input digests.
Json run_report(const std::string& command, Json results, const std::map<std::string, std::string>& digests);

std::string render_text(const Json& report);

}  // namespace properlie
