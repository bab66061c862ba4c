#pragma once

#include <string>

#include <json.hpp>

#include "updown/square.hpp"
#include "updown/verify.hpp"

namespace updown {

/// Machine-readable report with a stable key order:
/// order, width, alphabet, s1, s2, flags{...}, expected{s1,s2},
/// rotated{s1,s2}, failures[{family,index,s1,s2}].
/// Sums that do not apply are null; `expected` is null when the shape cannot
/// hold a combination-complete square, `rotated` when the square cannot be
/// rotated.
nlohmann::ordered_json report_json(const Square& sq, const PropertyReport& rep);

/// Human-readable report, one property per line.
std::string report_text(const Square& sq, const PropertyReport& rep);

}  // namespace updown
