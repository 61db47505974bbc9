#pragma once

#include <optional>
#include <string>

#include "vnca/regularity.hpp"

namespace vnca {

/// One line of the machine-readable certificate format.
///
/// Records are JSON objects, one per line, with a fixed field order:
///
///   {"schema":1,"rule":<number|literal>,"class_rep":<number>,
///    "status":"regular","sigma":"<rule literal>","generalized":<bool>,
///    "bounds":{"radius":<int>,"period":<int>}}
///   {"schema":1,"rule":...,"class_rep":...,"status":"non_regular",
///    "witness":{"period":<int>,"cells":"<digits>"},"bounds":{...}}
///   {"schema":1,"rule":...,"class_rep":...,"status":"undecided","bounds":{...}}
///
/// "rule" is the Wolfram number for elementary rules and a rule literal
/// string otherwise; "class_rep" is present only for elementary rules.
struct CertificateRecord {
  RuleTable rule;
  std::optional<unsigned> rule_number;
  std::optional<unsigned> class_representative;
  Certificate certificate = UndecidedCertificate{};
  SearchBounds bounds;
};

inline constexpr int kCertificateSchemaVersion = 1;

std::string record_line(const CertificateRecord& record);
CertificateRecord parse_record_line(const std::string& line);

/// Re-verifies the record: certificate against the rule, and the class
/// representative against the rule's equivalence class when both are present.
bool verify_record(const CertificateRecord& record);

CertificateRecord make_record(const RuleClassification& classification, const SearchBounds& bounds);

}  // namespace vnca
