#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "vnca/periodic_config.hpp"
#include "vnca/preimage.hpp"
#include "vnca/rule_table.hpp"

namespace vnca {

struct SearchBounds {
  int max_radius = 1;  // symmetric radius of candidate inverse tables
  int max_period = 3;  // largest witness period tried
};

/// A verified weak (or generalized) inverse.
struct RegularCertificate {
  RuleTable sigma;
  bool generalized;  // sigma.tau.sigma == sigma holds as well

  bool operator==(const RegularCertificate&) const = default;
};

/// A periodic configuration in the image of the rule such that no preimage
/// has the same least period; certifies that no weak inverse exists.
struct NonRegularCertificate {
  PeriodicConfig witness;
  std::size_t witness_period;  // least period of the witness

  bool operator==(const NonRegularCertificate&) const = default;
};

/// Search bounds exhausted without an answer; an explicit outcome, never an
/// error.
struct UndecidedCertificate {
  int searched_radius = 0;
  int searched_period = 0;

  bool operator==(const UndecidedCertificate&) const = default;
};

using Certificate = std::variant<RegularCertificate, NonRegularCertificate, UndecidedCertificate>;

enum class Status { regular, non_regular, undecided };

Status certificate_status(const Certificate& certificate);

/// Re-checks a certificate against the rule it was issued for: exact table
/// composition for Regular, image membership plus period-matched preimage
/// emptiness for NonRegular.  Undecided certificates make no claim.
bool verify_certificate(const RuleTable& tau, const Certificate& certificate);

/// tau.sigma.tau == tau, decided by exact table composition.
bool check_weak_inverse(const RuleTable& tau, const RuleTable& sigma);

/// Both tau.sigma.tau == tau and sigma.tau.sigma == sigma.
bool check_generalized_inverse(const RuleTable& tau, const RuleTable& sigma);

/// b.tau.b' for weak inverses b, b' of tau; always a generalized inverse.
RuleTable weak_to_generalized(const RuleTable& tau, const RuleTable& b, const RuleTable& b_prime);

/// Backtracking search for a binary weak inverse over symmetric windows of
/// radius 1, then 2.  Table entries are assigned in ascending word order with
/// symbol 0 tried before 1, and every fully determined entry of
/// tau.sigma.tau is checked immediately, so the first inverse found is
/// deterministic.  max_radius must be 1 or 2.
Certificate search_weak_inverse(const RuleTable& tau, int max_radius);

/// Looks for a periodic witness of non-regularity: for d = 1..max_period and
/// each configuration of least period exactly d (one representative per
/// rotation class, ascending), returns the first x that lies in the image of
/// tau while no preimage of x has least period d.
Certificate find_nonregularity_witness(const RuleTable& tau, int max_period);

/// Orbit of an elementary rule under mirror and complements, as Wolfram
/// numbers; 48 classes partition 0..255.
struct EquivalenceClass {
  unsigned representative = 0;       // smallest member
  std::vector<unsigned> members;     // sorted ascending

  bool operator==(const EquivalenceClass&) const = default;
};

EquivalenceClass equivalence_class(unsigned rule_number);
std::vector<EquivalenceClass> all_equivalence_classes();  // ordered by representative

/// One of the eight symmetries linking members of a class:
/// rule' = mirror^m (complement-before^b (complement-after^a (rule))).
struct ClassTransform {
  bool mirrored = false;
  bool complement_before = false;  // complement applied before the rule
  bool complement_after = false;   // complement applied after the rule

  bool operator==(const ClassTransform&) const = default;
};

unsigned transform_rule_number(unsigned rule_number, const ClassTransform& t);

/// The first transform (in a fixed scan order) sending `from` to `to`; the
/// two numbers must lie in the same equivalence class.
ClassTransform transform_between(unsigned from, unsigned to);

/// Conjugated weak inverse for the transformed rule: complements swap sides
/// and the mirror passes through.
RuleTable transport_inverse(const RuleTable& sigma, const ClassTransform& t);

/// Witness for the transformed rule: complement-after complements the cells,
/// the mirror reverses them, complement-before leaves them unchanged.
PeriodicConfig transport_witness(const PeriodicConfig& witness, const ClassTransform& t);

Certificate transport_certificate(const Certificate& certificate, const RuleTable& transformed_rule,
                                  const ClassTransform& t);

struct RuleClassification {
  unsigned rule = 0;
  unsigned class_representative = 0;
  Certificate certificate;
};

struct ClassSummary {
  unsigned representative = 0;
  std::vector<unsigned> members;
  Status status = Status::undecided;
  Certificate certificate;  // for the representative
};

struct ClassificationReport {
  SearchBounds bounds;
  std::vector<ClassSummary> classes;      // 48, ordered by representative
  std::vector<RuleClassification> rules;  // 256, ordered by rule number
  int classes_regular = 0;
  int classes_non_regular = 0;
  int classes_undecided = 0;
  int rules_regular = 0;
  int rules_non_regular = 0;
  int rules_undecided = 0;
};

/// Full classification of the 256 elementary rules.  Statuses are computed
/// per class representative (with a consistency re-run on a second member),
/// then transported to every member and re-verified.  Throws std::logic_error
/// if any rule would end up both Regular and NonRegular.
ClassificationReport classify_elementary(const SearchBounds& bounds, int threads = 1);

/// The fixed non-regular composition over the line with binary alphabet:
/// tau1 keeps the centre cell when the three window cells agree and writes 0
/// otherwise; tau2 writes 1 on the all-zero window and keeps the centre cell
/// otherwise; tau = tau2 then tau1.  The certificate's witness is the
/// constant-0 configuration.
struct CounterexampleBundle {
  RuleTable tau1;
  RuleTable tau2;
  RuleTable tau;
  Certificate certificate;
};

CounterexampleBundle build_counterexample();

}  // namespace vnca
