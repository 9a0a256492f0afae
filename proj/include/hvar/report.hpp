#pragma once

// JSON views of ideals, invariant data and check reports.  Objects use
// nlohmann's default std::map storage, so keys always serialize sorted.

#include "hvar/bounds.hpp"
#include "hvar/invariants.hpp"

#include <json.hpp>

#include <string>

namespace hvar {

using Json = nlohmann::json;

/// A number when it fits in int64, otherwise its decimal string.
Json int_json(const Int& v);
/// Inverse of int_json; also accepts plain JSON integers.
Int json_int(const Json& j);

Json to_json(const RingContext& ctx);
Json to_json(const Ideal& i);
Json to_json(const BinomialPolynomial& p);
Json to_json(const LengthSequence& s);
Json to_json(const HilbertData& h);
Json to_json(const FiberData& f);
Json to_json(const NormalData& n);
Json to_json(const ReductionReport& r);
Json to_json(const SallyReport& s);
Json to_json(const BoundReport& b);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace hvar
