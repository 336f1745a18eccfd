#pragma once

// JSON wire formats for every value the library exchanges.
//
//   NumericalClass      [d, m1, ..., m9]
//   ReductionCertificate {"success", "start", "terminal",
//                         "steps": [{"indices", "before", "after"}, ...]}
//   PencilSpec          {"model": "P2"|"dP<d>", "level", "mults", "extra_conditions"}
//   OrbitStructure      {"orbit_sizes": [...], "rational_orbit_index"}
//   FibreConfiguration  [{"place": "v0", "type": "I0*"}, ...]  (also accepted:
//                       {"I0*": 1, "I1": 6}, places named v0, v1, ... in key order)
//   Rational            "p/q"
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both spellings are accepted on input.

#include "pencilforge/base_change.hpp"
#include "pencilforge/cremona.hpp"
#include "pencilforge/heights.hpp"
#include "pencilforge/pencils.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace pencilforge {

using Json = nlohmann::ordered_json;

/// Structurally invalid input (wrong shape, wrong length, unknown keys).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const NumericalClass& c);
NumericalClass class_from_json(const Json& j);

Json to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const Json& j);

Json to_json(const OrbitStructure& o);
OrbitStructure orbits_from_json(const Json& j);

Json to_json(const PencilSpec& s);
PencilSpec spec_from_json(const Json& j);

Json to_json(const PencilReport& r);
PencilReport report_from_json(const Json& j);

Json to_json(const OrbitRewrite& rw);
OrbitRewrite rewrite_from_json(const Json& j);

/// {"construction", "model", "orbits", "rewrite"?, "first", "second"} or
/// {"unsupported": reason}
Json to_json(const ConstructionResult& r);
ConstructionResult construction_from_json(const Json& j);

Json to_json(const FibreConfiguration& c);
FibreConfiguration configuration_from_json(const Json& j);

} // namespace pencilforge
