#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "umbral/lattice.hpp"
#include "umbral/partitions.hpp"
#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"
#include "umbral/series.hpp"
#include "umbral/transforms.hpp"

namespace umbral::io {

// JSON wire formats. Rationals always travel as "p/q" strings (q omitted
// when 1); integers are accepted on input but never produced. Objects keep
// their documented key order. Malformed input throws std::invalid_argument.

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(std::span<const Rational> values);

/// {"order": N, "coeffs": ["1", "-1/2", ...]}
Json to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j);

/// {"order": N, "values": [...]}. A bare string names a constant sequence
/// and then needs `order`.
Json to_json(const MomentSequence& a);
MomentSequence moments_from_json(const Json& j, std::optional<std::size_t> order = std::nullopt);

/// {"n": 4, "blocks": [[1,2],[3,4]]}
Json to_json(const SetPartition& p);
SetPartition partition_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[row 1], [row 2], ...]}
Json to_json(const CumulantMatrix& m);

/// {"theorem": "T2", "n": 4, "pass": true, "checked": 14}, plus "detail"
/// on failure.
Json to_json(const VerificationReport& r);

/// Canonical text: compact dump of the JSON value.
std::string dump(const Json& j);

}  // namespace umbral::io
