#pragma once

#include "lefkit/families.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/macaulay.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lefkit {

using Json = nlohmann::ordered_json;

/// `(1, 6, 6, 1)`
std::string format_sequence(const std::vector<std::size_t>& values);

/// {var: "coeff"} over the nonzero coefficients, in layout order.
Json linear_to_json(const FamilySpec& spec, const Poly& linear);

/// Reads {var: "p/q" | integer}. Unknown names raise Error{Parse}.
Poly linear_from_json(const FamilySpec& spec, const Json& j);

Json hilbert_json(const FamilySpec& spec, const HilbertFn& h, const std::vector<DegreeRow>& rows);
std::string hilbert_csv(const std::vector<DegreeRow>& rows);

Json slp_json(const SlpReport& report);
std::string slp_csv(const SlpReport& report);
std::string slp_text(const SlpReport& report);

Json verify_json(const TheoremSummary& summary);
std::string verify_csv(const TheoremSummary& summary);
std::string verify_text(const TheoremSummary& summary);

Json predict_json(const FamilySpec& spec, const HilbertFn& predicted, const HilbertFn& computed);
std::string predict_csv(const HilbertFn& predicted, const HilbertFn& computed);

} // namespace lefkit
