#include "hbsums/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace hbsums {

nlohmann::json to_json_value(const Rational& x) { return to_string(x); }

nlohmann::json to_json_value(const PadicNumber& x) {
  return {{"p", x.prime()},
          {"valuation", x.valuation()},
          {"digits", x.is_zero() ? std::vector<long>{} : x.digits()},
          {"precision", x.precision()}};
}

nlohmann::json to_json_value(const CycloElement& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json_value(c));
  return {{"p", x.prime()}, {"level", x.level()}, {"coeffs", coeffs}};
}

nlohmann::json to_json_value(const FermionicLimitReport& r) {
  nlohmann::json branches = nlohmann::json::object();
  for (const auto& [res, v] : r.branch_values) branches[std::to_string(res)] = to_string(v);
  return {{"modulus", r.modulus},
          {"block_sum", to_string(r.block_sum)},
          {"branches", branches},
          {"branch_independent", r.branch_independent}};
}

nlohmann::json to_json_value(const AuditReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"identity", r.identity}, {"params", params},         {"lhs", r.lhs},
          {"rhs", r.rhs},           {"match", to_string(r.match)}, {"details", r.details}};
}

nlohmann::json to_json_value(const GeneratingSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t n = 0; n <= s.coeffs.order(); ++n) {
    nlohmann::json rec = to_json_value(s.coeffs[n]);
    rec["n"] = n;
    rec["precision_ledger"] = s.precision_ledger[static_cast<std::size_t>(n)];
    out.push_back(std::move(rec));
  }
  return out;
}

std::string to_compact_string(const CycloElement& x) { return to_json_value(x).dump(); }

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string audit_csv(const std::vector<AuditReport>& reports) {
  std::ostringstream os;
  os << "identity,params,lhs,match,branch,branch_value,details\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    const auto prefix = csv_field(r.identity) + "," + csv_field(params) + "," + csv_field(r.lhs) + "," +
                        to_string(r.match) + ",";
    const auto it = r.rhs.find("branches");
    if (it == r.rhs.end() || it->empty()) {
      os << prefix << ",," << csv_field(r.details) << "\n";
      continue;
    }
    for (const auto& [res, v] : it->items())
      os << prefix << res << "," << csv_field(v.get<std::string>()) << "," << csv_field(r.details) << "\n";
  }
  return os.str();
}

std::string fermionic_report_csv(const FermionicLimitReport& r) {
  std::ostringstream os;
  os << "modulus,block_sum,branch,branch_value,branch_independent\n";
  for (const auto& [res, v] : r.branch_values)
    os << r.modulus << "," << to_string(r.block_sum) << "," << res << "," << to_string(v) << ","
       << (r.branch_independent ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace hbsums
