#include "vnca/certificate_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace vnca {

namespace {

using Json = nlohmann::ordered_json;

}  // namespace

std::string record_line(const CertificateRecord& record) {
  Json j;
  j["schema"] = kCertificateSchemaVersion;
  if (record.rule_number) {
    j["rule"] = *record.rule_number;
  } else {
    j["rule"] = rule_literal(record.rule);
  }
  if (record.class_representative) j["class_rep"] = *record.class_representative;
  if (const auto* reg = std::get_if<RegularCertificate>(&record.certificate)) {
    j["status"] = "regular";
    j["sigma"] = rule_literal(reg->sigma);
    j["generalized"] = reg->generalized;
  } else if (const auto* wit = std::get_if<NonRegularCertificate>(&record.certificate)) {
    j["status"] = "non_regular";
    j["witness"] = Json{{"period", wit->witness_period}, {"cells", wit->witness.to_string()}};
  } else {
    j["status"] = "undecided";
  }
  j["bounds"] = Json{{"radius", record.bounds.max_radius}, {"period", record.bounds.max_period}};
  return j.dump();
}

CertificateRecord parse_record_line(const std::string& line) {
  Json j = Json::parse(line);  // throws nlohmann::json::parse_error on bad input
  if (!j.is_object()) throw std::invalid_argument("certificate record must be a JSON object");
  if (j.at("schema").get<int>() != kCertificateSchemaVersion) {
    throw std::invalid_argument("unsupported certificate schema version");
  }

  std::optional<unsigned> rule_number;
  RuleTable rule = [&] {
    const Json& r = j.at("rule");
    if (r.is_number_unsigned()) {
      rule_number = r.get<unsigned>();
      return wolfram_rule(*rule_number);
    }
    if (r.is_string()) {
      RuleTable parsed = parse_rule_literal(r.get<std::string>());
      return parsed;
    }
    throw std::invalid_argument("rule field must be a number or a rule literal");
  }();

  std::optional<unsigned> class_rep;
  if (j.contains("class_rep")) class_rep = j.at("class_rep").get<unsigned>();

  SearchBounds bounds;
  const Json& b = j.at("bounds");
  bounds.max_radius = b.at("radius").get<int>();
  bounds.max_period = b.at("period").get<int>();

  Certificate certificate = UndecidedCertificate{bounds.max_radius, bounds.max_period};
  const std::string status = j.at("status").get<std::string>();
  if (status == "regular") {
    RuleTable sigma = parse_rule_literal(j.at("sigma").get<std::string>());
    certificate = RegularCertificate{std::move(sigma), j.at("generalized").get<bool>()};
  } else if (status == "non_regular") {
    const Json& w = j.at("witness");
    PeriodicConfig witness =
        PeriodicConfig::from_string(rule.alphabet(), w.at("cells").get<std::string>());
    certificate = NonRegularCertificate{std::move(witness), w.at("period").get<std::size_t>()};
  } else if (status != "undecided") {
    throw std::invalid_argument("unknown certificate status: " + status);
  }

  return CertificateRecord{std::move(rule), rule_number, class_rep, std::move(certificate), bounds};
}

bool verify_record(const CertificateRecord& record) {
  if (record.rule_number && record.class_representative &&
      equivalence_class(*record.rule_number).representative != *record.class_representative) {
    return false;
  }
  return verify_certificate(record.rule, record.certificate);
}

CertificateRecord make_record(const RuleClassification& classification, const SearchBounds& bounds) {
  return CertificateRecord{wolfram_rule(classification.rule), classification.rule,
                           classification.class_representative, classification.certificate, bounds};
}

}  // namespace vnca
