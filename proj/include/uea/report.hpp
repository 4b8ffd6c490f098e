#ifndef UEA_REPORT_HPP
#define UEA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uea {

/// Schema version stamped into every serialized report.
inline constexpr int kReportSchemaVersion = 1;

enum class ClaimStatus { pass, fail, skipped };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

/// One verified statement. The id is stable across runs and versions (e.g.
/// "center.central.z1"); the witness explains a failure or records supporting
/// data for a pass.
struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::fail;
  std::string witness;

  bool operator==(const Claim&) const = default;
};

/// Outcome of one verification run against one algebra instance.
struct VerificationReport {
  std::string algebra;
  uint32_t p = 0;
  std::optional<uint32_t> eps;
  std::vector<Claim> claims;

  void add(std::string id, bool ok, std::string witness = "");
  void add_skipped(std::string id, std::string witness);
  /// Orders claims by id; call before serializing.
  void sort_claims();

  bool all_passed() const; ///< no claim failed (skipped claims do not count)
  size_t failed_count() const;

  bool operator==(const VerificationReport&) const = default;
};

/// JSON text for one report or a list of reports; schema:
/// {"schema_version":1,"algebra":...,"p":...,"eps":null|int,"claims":[...]}.
std::string to_json(const VerificationReport& r, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& rs, int indent = 2);

VerificationReport report_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// Human-readable rendering, one line per claim.
std::string to_text(const VerificationReport& r);

} // namespace uea

#endif
