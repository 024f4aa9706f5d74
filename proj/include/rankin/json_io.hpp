#pragma once

#include "json.hpp"

#include "rankin/charring.hpp"
#include "rankin/cohomology.hpp"
#include "rankin/compat.hpp"
#include "rankin/decomposition.hpp"
#include "rankin/halfint.hpp"
#include "rankin/ktypes.hpp"
#include "rankin/ltheory.hpp"
#include "rankin/weights.hpp"

// Output schema. Numbers are exact integers; half-odd values become "p/2"
// strings, and integers too wide for int64 become decimal strings.
namespace rankin::json_io {

using Json = nlohmann::ordered_json;

Json to_json(HalfInt h);
Json to_json(const GLWeight& w);
Json to_json(const BigInt& b);
Json to_json(const Decomposition& d);
Json to_json(const TripleDecomposition& d);
Json to_json(const ltheory::CriticalData& c);
Json to_json(const compat::CaseData& c);
Json to_json(const ktypes::DistinguishedKTypes& k);
Json to_json(const ktypes::LemmaReport& r);

/// Compact single-line document followed by a newline, or indented with pretty.
std::string render(const Json& doc, bool pretty = false);

}  // namespace rankin::json_io
