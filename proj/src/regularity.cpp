#include "vnca/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace vnca {

Status certificate_status(const Certificate& certificate) {
  if (std::holds_alternative<RegularCertificate>(certificate)) return Status::regular;
  if (std::holds_alternative<NonRegularCertificate>(certificate)) return Status::non_regular;
  return Status::undecided;
}

bool check_weak_inverse(const RuleTable& tau, const RuleTable& sigma) {
  return rules_equal(compose(compose(tau, sigma), tau), tau);
}

bool check_generalized_inverse(const RuleTable& tau, const RuleTable& sigma) {
  return check_weak_inverse(tau, sigma) && check_weak_inverse(sigma, tau);
}

RuleTable weak_to_generalized(const RuleTable& tau, const RuleTable& b, const RuleTable& b_prime) {
  if (!check_weak_inverse(tau, b) || !check_weak_inverse(tau, b_prime)) {
    throw std::invalid_argument("weak_to_generalized requires two weak inverses of tau");
  }
  RuleTable result = compose(compose(b, tau), b_prime);
  if (!check_generalized_inverse(tau, result)) {
    throw std::logic_error("b.tau.b' failed the generalized-inverse identities");
  }
  return result;
}

bool verify_certificate(const RuleTable& tau, const Certificate& certificate) {
  if (const auto* reg = std::get_if<RegularCertificate>(&certificate)) {
    if (!check_weak_inverse(tau, reg->sigma)) return false;
    return reg->generalized == check_generalized_inverse(tau, reg->sigma);
  }
  if (const auto* wit = std::get_if<NonRegularCertificate>(&certificate)) {
    if (wit->witness.alphabet() != tau.alphabet()) return false;
    const std::size_t d = least_period(wit->witness);
    if (d != wit->witness_period) return false;
    if (!has_preimage(tau, wit->witness)) return false;
    for (const PeriodicConfig& y : periodic_preimages(tau, wit->witness, d)) {
      if (least_period(y) == d) return false;
    }
    return true;
  }
  return true;  // Undecided claims nothing
}

namespace {

// Backtracking search for a weak inverse with symmetric radius s over the
// binary alphabet.  Every composite window of tau.sigma.tau touches
// window_length(tau) entries of sigma; a constraint becomes checkable once
// its highest-numbered entry is assigned.
std::optional<RuleTable> search_symmetric_radius(const RuleTable& tau, int s) {
  const int tau_len = tau.window_length();
  const int sigma_len = 2 * s + 1;
  const std::size_t entries = std::size_t{1} << sigma_len;
  const int mid_len = tau_len + sigma_len - 1;        // output cells of the first tau pass
  const int full_len = mid_len + tau_len - 1;         // composite window length
  const std::size_t words = std::size_t{1} << full_len;

  struct Constraint {
    std::vector<std::uint16_t> windows;  // sigma entries read, left to right
    std::uint8_t target;
  };

  // Deduplicate by the touched-entry tuple; conflicting targets mean no
  // assignment can work.
  std::map<std::vector<std::uint16_t>, std::uint8_t> dedup;
  std::vector<std::uint8_t> digits(full_len), mid(mid_len);
  for (std::size_t w = 0; w < words; ++w) {
    for (int i = full_len - 1, v = static_cast<int>(w); i >= 0; --i, v >>= 1) {
      digits[i] = static_cast<std::uint8_t>(v & 1);
    }
    for (int j = 0; j < mid_len; ++j) {
      std::size_t word = 0;
      for (int k = 0; k < tau_len; ++k) word = word * 2 + digits[j + k];
      mid[j] = tau.output(word);
    }
    std::vector<std::uint16_t> touched(tau_len);
    for (int k = 0; k < tau_len; ++k) {
      std::size_t word = 0;
      for (int j = 0; j < sigma_len; ++j) word = word * 2 + mid[k + j];
      touched[k] = static_cast<std::uint16_t>(word);
    }
    // Target: tau evaluated on the centre slice of the composite window.
    std::size_t centre = 0;
    for (int k = 0; k < tau_len; ++k) centre = centre * 2 + digits[tau.left() + s + k];
    const std::uint8_t target = tau.output(centre);

    auto [it, inserted] = dedup.emplace(std::move(touched), target);
    if (!inserted && it->second != target) return std::nullopt;
  }

  std::vector<std::vector<Constraint>> by_max(entries);
  for (auto& [touched, target] : dedup) {
    const std::uint16_t max_idx = *std::max_element(touched.begin(), touched.end());
    by_max[max_idx].push_back(Constraint{touched, target});
  }

  std::vector<std::uint8_t> assign(entries, 0);
  const int tau_top = tau_len - 1;
  auto satisfied = [&](const Constraint& c) {
    std::size_t word = 0;
    for (int k = 0; k <= tau_top; ++k) word = word * 2 + assign[c.windows[k]];
    return tau.output(word) == c.target;
  };

  // Iterative DFS: entry k takes value assign[k]; 0 is tried before 1.
  std::size_t k = 0;
  while (true) {
    bool ok = true;
    for (const Constraint& c : by_max[k]) {
      if (!satisfied(c)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (k + 1 == entries) {
        return RuleTable(2, s, s, assign);
      }
      ++k;
      assign[k] = 0;
      continue;
    }
    while (assign[k] == 1) {
      if (k == 0) return std::nullopt;
      --k;
    }
    assign[k] = 1;
  }
}

}  // namespace

Certificate search_weak_inverse(const RuleTable& tau, int max_radius) {
  if (max_radius < 1 || max_radius > 2) throw std::invalid_argument("supported radii are 1 and 2");
  if (tau.alphabet() != 2) throw std::invalid_argument("inverse search requires a binary alphabet");
  for (int s = 1; s <= max_radius; ++s) {
    if (auto sigma = search_symmetric_radius(tau, s)) {
      const bool generalized = check_generalized_inverse(tau, *sigma);
      return RegularCertificate{std::move(*sigma), generalized};
    }
  }
  return UndecidedCertificate{max_radius, 0};
}

namespace {

// Lexicographically-smallest rotation representatives of the words with least
// period exactly d, in ascending numeric order.
std::vector<std::vector<std::uint8_t>> rotation_representatives(unsigned q, std::size_t d) {
  std::vector<std::vector<std::uint8_t>> out;
  const std::size_t count = checked_table_size(q, static_cast<int>(d));
  std::vector<std::uint8_t> cells(d);
  for (std::size_t word = 0; word < count; ++word) {
    std::size_t v = word;
    for (std::size_t i = d; i-- > 0;) {
      cells[i] = static_cast<std::uint8_t>(v % q);
      v /= q;
    }
    bool representative = true;
    for (std::size_t r = 1; r < d && representative; ++r) {
      // Compare the rotation by r against the word itself; an equal rotation
      // means the least period is a proper divisor of d.
      for (std::size_t i = 0; i < d; ++i) {
        const std::uint8_t a = cells[(i + r) % d];
        if (a != cells[i]) {
          representative = a > cells[i];
          break;
        }
        if (i + 1 == d) representative = false;
      }
    }
    if (representative) out.push_back(cells);
  }
  return out;
}

}  // namespace

Certificate find_nonregularity_witness(const RuleTable& tau, int max_period) {
  if (max_period < 1) throw std::invalid_argument("max_period must be at least 1");
  const unsigned q = tau.alphabet();
  for (int d = 1; d <= max_period; ++d) {
    for (const auto& cells : rotation_representatives(q, static_cast<std::size_t>(d))) {
      PeriodicConfig x(q, cells);
      if (!has_preimage(tau, x)) continue;
      bool matched_period = false;
      for (const PeriodicConfig& y : periodic_preimages(tau, x, static_cast<std::size_t>(d))) {
        if (least_period(y) == static_cast<std::size_t>(d)) {
          matched_period = true;
          break;
        }
      }
      if (!matched_period) {
        return NonRegularCertificate{std::move(x), static_cast<std::size_t>(d)};
      }
    }
  }
  return UndecidedCertificate{0, max_period};
}

unsigned transform_rule_number(unsigned rule_number, const ClassTransform& t) {
  RuleTable rule = wolfram_rule(rule_number);
  if (t.complement_after) rule = complement_right(rule);
  if (t.complement_before) rule = complement_left(rule);
  if (t.mirrored) rule = mirror(rule);
  return *wolfram_number(rule);
}

EquivalenceClass equivalence_class(unsigned rule_number) {
  if (rule_number > 255) throw std::invalid_argument("Wolfram number out of range");
  std::vector<unsigned> members;
  for (int m = 0; m < 2; ++m) {
    for (int b = 0; b < 2; ++b) {
      for (int a = 0; a < 2; ++a) {
        const ClassTransform t{m != 0, b != 0, a != 0};
        members.push_back(transform_rule_number(rule_number, t));
      }
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return EquivalenceClass{members.front(), std::move(members)};
}

std::vector<EquivalenceClass> all_equivalence_classes() {
  std::vector<EquivalenceClass> classes;
  std::vector<bool> seen(256, false);
  for (unsigned n = 0; n < 256; ++n) {
    if (seen[n]) continue;
    EquivalenceClass cls = equivalence_class(n);
    for (unsigned m : cls.members) seen[m] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

ClassTransform transform_between(unsigned from, unsigned to) {
  for (int m = 0; m < 2; ++m) {
    for (int b = 0; b < 2; ++b) {
      for (int a = 0; a < 2; ++a) {
        const ClassTransform t{m != 0, b != 0, a != 0};
        if (transform_rule_number(from, t) == to) return t;
      }
    }
  }
  throw std::invalid_argument("rules are not equivalent");
}

RuleTable transport_inverse(const RuleTable& sigma, const ClassTransform& t) {
  RuleTable out = sigma;
  // For rule' = phi^b . rule . phi^a the weak inverse conjugates to
  // phi^a . sigma . phi^b: the complements swap sides.
  if (t.complement_before) out = complement_right(out);
  if (t.complement_after) out = complement_left(out);
  if (t.mirrored) out = mirror(out);
  return out;
}

PeriodicConfig transport_witness(const PeriodicConfig& witness, const ClassTransform& t) {
  std::vector<std::uint8_t> cells = witness.cells();
  if (t.complement_after) {
    for (auto& c : cells) c = static_cast<std::uint8_t>(1 - c);
  }
  if (t.mirrored) {
    const std::size_t d = cells.size();
    std::vector<std::uint8_t> reversed(d);
    for (std::size_t i = 0; i < d; ++i) reversed[i] = cells[(d - i) % d];
    cells = std::move(reversed);
  }
  return PeriodicConfig(witness.alphabet(), std::move(cells));
}

Certificate transport_certificate(const Certificate& certificate, const RuleTable& transformed_rule,
                                  const ClassTransform& t) {
  if (const auto* reg = std::get_if<RegularCertificate>(&certificate)) {
    RuleTable sigma = transport_inverse(reg->sigma, t);
    const bool generalized = check_generalized_inverse(transformed_rule, sigma);
    return RegularCertificate{std::move(sigma), generalized};
  }
  if (const auto* wit = std::get_if<NonRegularCertificate>(&certificate)) {
    PeriodicConfig witness = transport_witness(wit->witness, t);
    return NonRegularCertificate{std::move(witness), wit->witness_period};
  }
  return certificate;
}

namespace {

struct ClassOutcome {
  Status status = Status::undecided;
  Certificate certificate = UndecidedCertificate{};
};

ClassOutcome classify_one(const RuleTable& rule, const SearchBounds& bounds) {
  Certificate regular = search_weak_inverse(rule, bounds.max_radius);
  Certificate witness = find_nonregularity_witness(rule, bounds.max_period);
  const bool is_regular = certificate_status(regular) == Status::regular;
  const bool is_non_regular = certificate_status(witness) == Status::non_regular;
  if (is_regular && is_non_regular) {
    throw std::logic_error("rule received both a Regular and a NonRegular certificate");
  }
  if (is_regular) return {Status::regular, std::move(regular)};
  if (is_non_regular) return {Status::non_regular, std::move(witness)};
  return {Status::undecided,
          UndecidedCertificate{bounds.max_radius, bounds.max_period}};
}

void run_indexed(std::size_t count, int threads, const std::function<void(std::size_t)>& work) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto runner = [&] {
    std::size_t i;
    while ((i = next.fetch_add(1)) < count) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(runner);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

ClassificationReport classify_elementary(const SearchBounds& bounds, int threads) {
  ClassificationReport report;
  report.bounds = bounds;

  std::vector<EquivalenceClass> classes = all_equivalence_classes();
  std::vector<ClassOutcome> outcomes(classes.size());

  run_indexed(classes.size(), threads, [&](std::size_t i) {
    const EquivalenceClass& cls = classes[i];
    outcomes[i] = classify_one(wolfram_rule(cls.representative), bounds);
    if (cls.members.size() > 1) {
      // Consistency check: a second member must reach the same status.
      const unsigned other = cls.members[1];
      const ClassOutcome check = classify_one(wolfram_rule(other), bounds);
      if (check.status != outcomes[i].status) {
        throw std::logic_error("class members disagree on vN-regularity status");
      }
    }
  });

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const EquivalenceClass& cls = classes[i];
    const ClassOutcome& outcome = outcomes[i];
    report.classes.push_back(
        ClassSummary{cls.representative, cls.members, outcome.status, outcome.certificate});
    switch (outcome.status) {
      case Status::regular: ++report.classes_regular; break;
      case Status::non_regular: ++report.classes_non_regular; break;
      case Status::undecided: ++report.classes_undecided; break;
    }
    for (unsigned member : cls.members) {
      const ClassTransform t = transform_between(cls.representative, member);
      const RuleTable member_rule = wolfram_rule(member);
      Certificate cert = transport_certificate(outcome.certificate, member_rule, t);
      if (!verify_certificate(member_rule, cert)) {
        throw std::logic_error("transported certificate failed re-verification");
      }
      report.rules.push_back(RuleClassification{member, cls.representative, std::move(cert)});
      switch (outcome.status) {
        case Status::regular: ++report.rules_regular; break;
        case Status::non_regular: ++report.rules_non_regular; break;
        case Status::undecided: ++report.rules_undecided; break;
      }
    }
  }
  std::sort(report.rules.begin(), report.rules.end(),
            [](const RuleClassification& a, const RuleClassification& b) { return a.rule < b.rule; });
  return report;
}

CounterexampleBundle build_counterexample() {
  std::vector<std::uint8_t> t1(8), t2(8);
  for (std::size_t w = 0; w < 8; ++w) {
    const std::uint8_t a = (w >> 2) & 1, b = (w >> 1) & 1, c = w & 1;
    t1[w] = (a == b && b == c) ? b : 0;          // keep the centre iff all agree
    t2[w] = (w == 0) ? std::uint8_t{1} : b;      // flip the all-zero window
  }
  RuleTable tau1(2, 1, 1, std::move(t1));
  RuleTable tau2(2, 1, 1, std::move(t2));
  RuleTable tau = compose(tau2, tau1);  // tau2 first, then tau1
  Certificate certificate = find_nonregularity_witness(tau, 1);
  return CounterexampleBundle{std::move(tau1), std::move(tau2), std::move(tau),
                              std::move(certificate)};
}

}  // namespace vnca
