#include "uea/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace uea {

using nlohmann::json;

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "fail";
}

ClaimStatus claim_status_from_string(const std::string& s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "skipped") return ClaimStatus::skipped;
  throw std::invalid_argument("unknown claim status: " + s);
}

void VerificationReport::add(std::string id, bool ok, std::string witness) {
  claims.push_back({std::move(id), ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(witness)});
}

void VerificationReport::add_skipped(std::string id, std::string witness) {
  claims.push_back({std::move(id), ClaimStatus::skipped, std::move(witness)});
}

void VerificationReport::sort_claims() {
  std::stable_sort(claims.begin(), claims.end(),
                   [](const Claim& a, const Claim& b) { return a.id < b.id; });
}

bool VerificationReport::all_passed() const { return failed_count() == 0; }

size_t VerificationReport::failed_count() const {
  size_t n = 0;
  for (const auto& c : claims)
    if (c.status == ClaimStatus::fail) ++n;
  return n;
}

namespace {

json report_to_json_obj(const VerificationReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["algebra"] = r.algebra;
  j["p"] = r.p;
  if (r.eps)
    j["eps"] = *r.eps;
  else
    j["eps"] = nullptr;
  j["claims"] = json::array();
  for (const auto& c : r.claims)
    j["claims"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"witness", c.witness}});
  return j;
}

VerificationReport report_from_json_obj(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("report JSON must be an object");
  int ver = j.at("schema_version").get<int>();
  if (ver != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version " + std::to_string(ver));
  VerificationReport r;
  r.algebra = j.at("algebra").get<std::string>();
  r.p = j.at("p").get<uint32_t>();
  if (!j.at("eps").is_null()) r.eps = j.at("eps").get<uint32_t>();
  for (const auto& cj : j.at("claims")) {
    Claim c;
    c.id = cj.at("id").get<std::string>();
    c.status = claim_status_from_string(cj.at("status").get<std::string>());
    c.witness = cj.at("witness").get<std::string>();
    r.claims.push_back(std::move(c));
  }
  return r;
}

} // namespace

std::string to_json(const VerificationReport& r, int indent) {
  return report_to_json_obj(r).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& rs, int indent) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json_obj(r));
  return arr.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  return report_from_json_obj(json::parse(text));
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of reports");
  std::vector<VerificationReport> out;
  for (const auto& j : arr) out.push_back(report_from_json_obj(j));
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::string s = r.algebra + "  p=" + std::to_string(r.p);
  if (r.eps) s += "  eps=" + std::to_string(*r.eps);
  s += "\n";
  for (const auto& c : r.claims) {
    s += "  [" + to_string(c.status) + "] " + c.id;
    if (!c.witness.empty()) s += "  (" + c.witness + ")";
    s += "\n";
  }
  return s;
}

} // namespace uea
