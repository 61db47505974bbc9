#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "vnca/regularity.hpp"

using namespace vnca;

namespace {

// The 48 symmetry classes of the elementary rules with the published
// regular / non-regular / open verdicts ('R', 'N', '-').  Class 41 is listed
// open here but carries a verified period-3 witness, found below.
struct GoldenClass {
  unsigned rep;
  std::vector<unsigned> members;
  char published;
};

const std::vector<GoldenClass> kGoldenClasses = {
    {0, {0, 255}, 'R'},
    {1, {1, 127, 128, 254}, 'R'},
    {2, {2, 8, 16, 64, 191, 239, 247, 253}, 'R'},
    {3, {3, 17, 63, 119, 136, 192, 238, 252}, 'R'},
    {4, {4, 32, 223, 251}, 'R'},
    {5, {5, 95, 160, 250}, 'R'},
    {6, {6, 20, 40, 96, 159, 215, 235, 249}, '-'},
    {7, {7, 21, 31, 87, 168, 224, 234, 248}, '-'},
    {9, {9, 65, 111, 125, 130, 144, 190, 246}, '-'},
    {10, {10, 80, 175, 245}, 'R'},
    {11, {11, 47, 81, 117, 138, 174, 208, 244}, 'R'},
    {12, {12, 34, 48, 68, 187, 207, 221, 243}, 'R'},
    {13, {13, 69, 79, 93, 162, 176, 186, 242}, 'R'},
    {14, {14, 42, 84, 112, 143, 171, 213, 241}, 'R'},
    {15, {15, 85, 170, 240}, 'R'},
    {18, {18, 72, 183, 237}, 'N'},
    {19, {19, 55, 200, 236}, 'R'},
    {22, {22, 104, 151, 233}, 'N'},
    {23, {23, 232}, '-'},
    {24, {24, 66, 189, 231}, 'N'},
    {25, {25, 61, 67, 103, 152, 188, 194, 230}, 'N'},
    {26, {26, 74, 82, 88, 167, 173, 181, 229}, 'N'},
    {27, {27, 39, 53, 83, 172, 202, 216, 228}, '-'},
    {28, {28, 56, 70, 98, 157, 185, 199, 227}, '-'},
    {29, {29, 71, 184, 226}, 'R'},
    {30, {30, 86, 106, 120, 135, 149, 169, 225}, 'N'},
    {33, {33, 123, 132, 222}, '-'},
    {35, {35, 49, 59, 115, 140, 196, 206, 220}, 'R'},
    {36, {36, 219}, 'N'},
    {37, {37, 91, 164, 218}, 'N'},
    {38, {38, 44, 52, 100, 155, 203, 211, 217}, 'N'},
    {41, {41, 97, 107, 121, 134, 148, 158, 214}, '-'},
    {43, {43, 113, 142, 212}, 'R'},
    {45, {45, 75, 89, 101, 154, 166, 180, 210}, 'N'},
    {46, {46, 116, 139, 209}, 'N'},
    {50, {50, 76, 179, 205}, 'R'},
    {51, {51, 204}, 'R'},
    {54, {54, 108, 147, 201}, 'N'},
    {57, {57, 99, 156, 198}, '-'},
    {58, {58, 78, 92, 114, 141, 163, 177, 197}, '-'},
    {60, {60, 102, 153, 195}, 'N'},
    {62, {62, 110, 118, 124, 131, 137, 145, 193}, 'N'},
    {73, {73, 109, 146, 182}, 'N'},
    {77, {77, 178}, '-'},
    {90, {90, 165}, 'N'},
    {94, {94, 122, 133, 161}, 'N'},
    {105, {105, 150}, 'N'},
    {126, {126, 129}, 'N'},
};

// Published (representative, weak inverse) pairs.
const std::vector<std::pair<unsigned, unsigned>> kInversePairs = {
    {0, 0},   {2, 16},  {4, 4},    {5, 5},    {10, 80},   {11, 85},
    {12, 12}, {13, 21}, {14, 85},  {15, 85},  {29, 29},   {35, 49},
    {43, 113}, {51, 51}, {76, 76}, {128, 254}, {192, 238}, {200, 200},
};

// Published non-regular representatives with their witness period (the
// witness families: constant 1, alternating 10, and 100-repeating).
const std::vector<std::pair<unsigned, std::size_t>> kWitnessTable = {
    {18, 2}, {22, 1}, {24, 2}, {25, 2}, {26, 2},  {30, 1},  {36, 1},
    {37, 2}, {38, 1}, {45, 2}, {46, 1}, {54, 1},  {60, 1},  {62, 1},
    {73, 2}, {90, 2}, {105, 3}, {122, 1}, {126, 1},
};

PeriodicConfig witness_family(std::size_t period) {
  switch (period) {
    case 1: return PeriodicConfig::from_string(2, "1");
    case 2: return PeriodicConfig::from_string(2, "10");
    default: return PeriodicConfig::from_string(2, "100");
  }
}

}  // namespace

TEST_CASE("weak and generalized inverse checks") {
  CHECK(check_weak_inverse(wolfram_rule(128), wolfram_rule(254)));
  CHECK(check_weak_inverse(wolfram_rule(0), wolfram_rule(0)));
  CHECK(check_generalized_inverse(wolfram_rule(128), wolfram_rule(254)));
  CHECK(check_generalized_inverse(wolfram_rule(204), wolfram_rule(204)));

  // 0.51.0 = 0 holds but 51.0.51 is the constant-1 rule 255, not 51.
  CHECK(check_weak_inverse(wolfram_rule(0), wolfram_rule(51)));
  CHECK_FALSE(check_generalized_inverse(wolfram_rule(0), wolfram_rule(51)));
  const RuleTable back = compose(compose(wolfram_rule(51), wolfram_rule(0)), wolfram_rule(51));
  CHECK(rules_equal(back, wolfram_rule(255)));

  // Rule 110 has no elementary weak inverse at all.
  for (unsigned s = 0; s < 256; ++s) {
    CHECK_FALSE(check_weak_inverse(wolfram_rule(110), wolfram_rule(s)));
  }
}

TEST_CASE("weak_to_generalized") {
  const RuleTable g128 = weak_to_generalized(wolfram_rule(128), wolfram_rule(254), wolfram_rule(254));
  CHECK(rules_equal(g128, wolfram_rule(254)));
  CHECK(check_generalized_inverse(wolfram_rule(128), g128));

  CHECK(rules_equal(weak_to_generalized(wolfram_rule(204), wolfram_rule(204), wolfram_rule(204)),
                    wolfram_rule(204)));

  const RuleTable g0 = weak_to_generalized(wolfram_rule(0), wolfram_rule(51), wolfram_rule(51));
  CHECK(rules_equal(g0, wolfram_rule(255)));
  CHECK(check_generalized_inverse(wolfram_rule(0), g0));

  CHECK_THROWS_AS(weak_to_generalized(wolfram_rule(110), wolfram_rule(0), wolfram_rule(0)),
                  std::invalid_argument);
}

TEST_CASE("search_weak_inverse is deterministic") {
  const Certificate c2 = search_weak_inverse(wolfram_rule(2), 1);
  const auto* r2 = std::get_if<RegularCertificate>(&c2);
  REQUIRE(r2 != nullptr);
  CHECK(wolfram_number(r2->sigma) == 16);

  const Certificate c0 = search_weak_inverse(wolfram_rule(0), 1);
  const auto* r0 = std::get_if<RegularCertificate>(&c0);
  REQUIRE(r0 != nullptr);
  CHECK(wolfram_number(r0->sigma) == 0);

  const Certificate c30 = search_weak_inverse(wolfram_rule(30), 1);
  CHECK(certificate_status(c30) == Status::undecided);
  CHECK(std::get<UndecidedCertificate>(c30).searched_radius == 1);

  CHECK_THROWS_AS(search_weak_inverse(wolfram_rule(2), 3), std::invalid_argument);
}

TEST_CASE("search at radius 2") {
  // Non-regular rules stay undecided even after the full radius-2 space.
  CHECK(certificate_status(search_weak_inverse(wolfram_rule(30), 2)) == Status::undecided);
  CHECK(certificate_status(search_weak_inverse(wolfram_rule(41), 2)) == Status::undecided);

  // Rule 7 has a radius-2 weak inverse although none exists at radius 1.
  const Certificate c7 = search_weak_inverse(wolfram_rule(7), 2);
  const auto* r7 = std::get_if<RegularCertificate>(&c7);
  REQUIRE(r7 != nullptr);
  CHECK(r7->sigma.left() == 2);
  CHECK(check_weak_inverse(wolfram_rule(7), r7->sigma));
}

TEST_CASE("nonregularity witnesses") {
  const Certificate c110 = find_nonregularity_witness(wolfram_rule(110), 1);
  const auto* w110 = std::get_if<NonRegularCertificate>(&c110);
  REQUIRE(w110 != nullptr);
  CHECK(w110->witness == PeriodicConfig::from_string(2, "1"));
  CHECK(w110->witness_period == 1);

  // Rule 90 also has the period-1 witness: the constant-1 configuration has
  // the period-4 preimage 0011 but no constant one.
  const Certificate c90 = find_nonregularity_witness(wolfram_rule(90), 2);
  const auto* w90 = std::get_if<NonRegularCertificate>(&c90);
  REQUIRE(w90 != nullptr);
  CHECK(w90->witness_period == 1);
  CHECK(w90->witness == PeriodicConfig::from_string(2, "1"));
  CHECK(has_preimage(wolfram_rule(90), w90->witness));

  const Certificate c105 = find_nonregularity_witness(wolfram_rule(105), 3);
  const auto* w105 = std::get_if<NonRegularCertificate>(&c105);
  REQUIRE(w105 != nullptr);
  CHECK(w105->witness_period == 3);

  CHECK(certificate_status(find_nonregularity_witness(wolfram_rule(204), 4)) == Status::undecided);
}

TEST_CASE("published witnesses are valid for every listed rule") {
  for (const auto& [rule_number, period] : kWitnessTable) {
    const PeriodicConfig witness = witness_family(period);
    REQUIRE(least_period(witness) == period);
    const Certificate cert = NonRegularCertificate{witness, period};
    CAPTURE(rule_number);
    CHECK(verify_certificate(wolfram_rule(rule_number), cert));
  }
}

TEST_CASE("published inverse pairs verify") {
  for (const auto& [rule_number, inverse] : kInversePairs) {
    CAPTURE(rule_number);
    CHECK(check_weak_inverse(wolfram_rule(rule_number), wolfram_rule(inverse)));
  }
  // The idempotent and cube-root pairs are generalized inverses.
  for (unsigned n : {0u, 4u, 5u, 12u, 29u, 51u, 76u, 200u}) {
    CAPTURE(n);
    CHECK(check_generalized_inverse(wolfram_rule(n), wolfram_rule(n)));
  }
  // Direct composition shows which published pairs are generalized inverses:
  // all but (11,85), (13,21) and (14,85).
  for (const auto& [rule_number, inverse] : kInversePairs) {
    const bool generalized = check_generalized_inverse(wolfram_rule(rule_number), wolfram_rule(inverse));
    const bool weak_only = (rule_number == 11 || rule_number == 13 || rule_number == 14);
    CAPTURE(rule_number);
    CHECK(generalized == !weak_only);
  }
}

TEST_CASE("equivalence classes") {
  const EquivalenceClass c110 = equivalence_class(110);
  CHECK(c110.representative == 62);
  CHECK(c110.members == std::vector<unsigned>{62, 110, 118, 124, 131, 137, 145, 193});

  const EquivalenceClass c204 = equivalence_class(204);
  CHECK(c204.representative == 51);
  CHECK(c204.members == std::vector<unsigned>{51, 204});

  const EquivalenceClass c0 = equivalence_class(0);
  CHECK(c0.representative == 0);
  CHECK(c0.members == std::vector<unsigned>{0, 255});

  // Every class size divides 8.
  for (unsigned n = 0; n < 256; ++n) {
    CHECK(8 % equivalence_class(n).members.size() == 0);
  }
}

TEST_CASE("the 48 classes partition the rules and match the published table") {
  const std::vector<EquivalenceClass> classes = all_equivalence_classes();
  REQUIRE(classes.size() == kGoldenClasses.size());
  std::set<unsigned> covered;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].representative == kGoldenClasses[i].rep);
    CHECK(classes[i].members == kGoldenClasses[i].members);
    for (unsigned m : classes[i].members) {
      CHECK(covered.insert(m).second);  // pairwise disjoint
    }
  }
  CHECK(covered.size() == 256);
}

TEST_CASE("classification agrees with the published verdicts plus class 41") {
  const ClassificationReport report = classify_elementary(SearchBounds{1, 3}, 2);
  REQUIRE(report.classes.size() == 48);

  std::map<unsigned, Status> status_by_rep;
  for (const ClassSummary& cls : report.classes) status_by_rep[cls.representative] = cls.status;

  for (const GoldenClass& golden : kGoldenClasses) {
    const Status status = status_by_rep.at(golden.rep);
    CAPTURE(golden.rep);
    if (golden.published == 'R') {
      CHECK(status == Status::regular);
    } else if (golden.published == 'N') {
      CHECK(status == Status::non_regular);
    } else if (golden.rep == 41) {
      // Open in the published table, but (001)-repeating lies in the image
      // of rule 41 (preimage 010100-repeating) while no period-3
      // configuration reaches it, so the class is non-regular.
      CHECK(status == Status::non_regular);
    } else {
      CHECK(status == Status::undecided);
    }
  }

  CHECK(report.classes_regular == 18);
  CHECK(report.classes_non_regular == 20);
  CHECK(report.classes_undecided == 10);
  CHECK(report.rules_regular == 96);
  CHECK(report.rules_non_regular == 100);
  CHECK(report.rules_undecided == 60);

  // Every per-rule certificate re-verifies, and no rule is dual-certified:
  // a Regular certificate excludes any witness at the searched bounds.
  REQUIRE(report.rules.size() == 256);
  for (const RuleClassification& rule : report.rules) {
    CAPTURE(rule.rule);
    CHECK(verify_certificate(wolfram_rule(rule.rule), rule.certificate));
    if (certificate_status(rule.certificate) == Status::regular) {
      CHECK(certificate_status(find_nonregularity_witness(wolfram_rule(rule.rule), 3)) ==
            Status::undecided);
    }
  }
}

TEST_CASE("certificates transport across a class") {
  const ClassificationReport report = classify_elementary(SearchBounds{1, 3}, 1);
  for (const ClassSummary& cls : report.classes) {
    if (cls.status == Status::undecided) continue;
    for (unsigned member : cls.members) {
      const ClassTransform t = transform_between(cls.representative, member);
      CHECK(transform_rule_number(cls.representative, t) == member);
      const Certificate moved = transport_certificate(cls.certificate, wolfram_rule(member), t);
      CAPTURE(cls.representative);
      CAPTURE(member);
      CHECK(verify_certificate(wolfram_rule(member), moved));
    }
  }
}

TEST_CASE("transport identities") {
  // Complement-before: sigma moves to the complement-after side, and the
  // mirrored inverse is the inverse of the mirrored rule.
  const RuleTable tau = wolfram_rule(2);
  const RuleTable sigma = wolfram_rule(16);
  REQUIRE(check_weak_inverse(tau, sigma));
  CHECK(check_weak_inverse(complement_left(tau), complement_right(sigma)));
  CHECK(check_weak_inverse(complement_right(tau), complement_left(sigma)));
  CHECK(check_weak_inverse(mirror(tau), mirror(sigma)));
}

TEST_CASE("classification is thread-count independent") {
  const ClassificationReport a = classify_elementary(SearchBounds{1, 2}, 1);
  const ClassificationReport b = classify_elementary(SearchBounds{1, 2}, 4);
  REQUIRE(a.rules.size() == b.rules.size());
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    CHECK(a.rules[i].rule == b.rules[i].rule);
    CHECK(a.rules[i].certificate == b.rules[i].certificate);
  }
}

TEST_CASE("counterexample bundle") {
  const CounterexampleBundle bundle = build_counterexample();
  CHECK(wolfram_number(bundle.tau1) == 128);
  CHECK(wolfram_number(bundle.tau2) == 205);
  CHECK(rules_equal(bundle.tau, compose(bundle.tau2, bundle.tau1)));

  CHECK(apply(bundle.tau, PeriodicConfig::constant(2, 0)) == PeriodicConfig::constant(2, 1));
  CHECK(apply(bundle.tau, PeriodicConfig::constant(2, 1)) == PeriodicConfig::constant(2, 1));
  CHECK(same_configuration(apply(bundle.tau, PeriodicConfig::from_string(2, "01")),
                           PeriodicConfig::constant(2, 0)));

  const auto* witness = std::get_if<NonRegularCertificate>(&bundle.certificate);
  REQUIRE(witness != nullptr);
  CHECK(witness->witness == PeriodicConfig::constant(2, 0));
  CHECK(witness->witness_period == 1);
  CHECK(verify_certificate(bundle.tau, bundle.certificate));
}

TEST_CASE("verify_certificate rejects broken certificates") {
  const RuleTable tau = wolfram_rule(2);
  CHECK(verify_certificate(tau, Certificate{RegularCertificate{wolfram_rule(16), true}}));
  CHECK_FALSE(verify_certificate(tau, Certificate{RegularCertificate{wolfram_rule(17), true}}));
  // Wrong generalized flag is rejected too.
  CHECK_FALSE(verify_certificate(tau, Certificate{RegularCertificate{wolfram_rule(16), false}}));

  const PeriodicConfig one = PeriodicConfig::from_string(2, "1");
  CHECK(verify_certificate(wolfram_rule(110), Certificate{NonRegularCertificate{one, 1}}));
  // Stored witness period must match the least period.
  CHECK_FALSE(verify_certificate(wolfram_rule(110), Certificate{NonRegularCertificate{one, 2}}));
  // Constant 0 has a constant preimage under rule 110, so it is no witness.
  CHECK_FALSE(verify_certificate(
      wolfram_rule(110), Certificate{NonRegularCertificate{PeriodicConfig::from_string(2, "0"), 1}}));
  // Undecided never fails.
  CHECK(verify_certificate(tau, Certificate{UndecidedCertificate{2, 5}}));
}
