#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hbsums/cyclo.hpp"
#include "hbsums/padic.hpp"
#include "hbsums/theorems.hpp"
#include "hbsums/twisted_bernoulli.hpp"
#include "hbsums/volkenborn.hpp"

namespace hbsums {

// Exact values serialize as strings ("num/den") or digit records; doubles are
// only emitted through format_double, which is round-trip exact.

nlohmann::json to_json_value(const Rational& x);
/// {"p", "valuation", "digits", "precision"}; a zero has no digits and its
/// valuation is the absolute precision it is known to.
nlohmann::json to_json_value(const PadicNumber& x);
/// {"p", "level", "coeffs": [padic...]}
nlohmann::json to_json_value(const CycloElement& x);
/// {"modulus", "block_sum", "branches": {"r": value}, "branch_independent"}
nlohmann::json to_json_value(const FermionicLimitReport& r);
/// {"identity", "params", "lhs", "rhs", "match", "details"}
nlohmann::json to_json_value(const AuditReport& r);
/// Array of coefficient records, each carrying its "precision_ledger" entry.
nlohmann::json to_json_value(const GeneratingSeries& s);

std::string to_compact_string(const CycloElement& x);
std::string format_double(double x);

/// One CSV row per branch of every report's branch map (one row when the
/// report has none). Fields: identity,params,lhs,match,branch,branch_value,details.
std::string audit_csv(const std::vector<AuditReport>& reports);
std::string fermionic_report_csv(const FermionicLimitReport& r);

}  // namespace hbsums
