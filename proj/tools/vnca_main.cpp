// vnca: decide, certify and count von Neumann regular cellular automata.
//
// Subcommands:
//   classify        classification of the 256 elementary rules
//   verify          re-check a certificate file
//   finite          boxes and the regular submonoid over a finite group
//   linear count    regular-element count in F_p[x]/(x^n - 1)
//   linear check    regularity of one ring element
//   counterexample  the canonical non-regular composed rule over the line

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vnca/certificate_io.hpp"
#include "vnca/finite_ca.hpp"
#include "vnca/linear_ca.hpp"
#include "vnca/regularity.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "human";
  std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->envname("VNCA_FORMAT")
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout")
      ->envname("VNCA_OUT");
}

class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("--out", "cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string status_token(vnca::Status status) {
  switch (status) {
    case vnca::Status::regular: return "R";
    case vnca::Status::non_regular: return "NR";
    case vnca::Status::undecided: return "-";
  }
  return "?";
}

int run_classify(const vnca::SearchBounds& bounds, int threads, const OutputOptions& opts) {
  const vnca::ClassificationReport report = vnca::classify_elementary(bounds, threads);
  Sink sink(opts.out_path);
  std::ostream& out = sink.stream();

  if (opts.format == "records") {
    for (const vnca::RuleClassification& rule : report.rules) {
      out << vnca::record_line(vnca::make_record(rule, report.bounds)) << "\n";
    }
    return kExitOk;
  }

  out << "vN-regularity of the 256 elementary rules"
      << " (inverse radius <= " << bounds.max_radius
      << ", witness period <= " << bounds.max_period << ")\n\n";
  out << " rep | status | members\n";
  out << "-----+--------+--------------------------------------------\n";
  for (const vnca::ClassSummary& cls : report.classes) {
    std::ostringstream members;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      if (i > 0) members << " ";
      members << cls.members[i];
    }
    out << " " << std::setw(3) << cls.representative << " | " << std::setw(6)
        << status_token(cls.status) << " | " << members.str() << "\n";
  }
  out << "\nclasses: " << report.classes.size() << " = " << report.classes_regular
      << " regular + " << report.classes_non_regular << " non-regular + "
      << report.classes_undecided << " undecided\n";
  out << "rules:   " << report.rules.size() << " = " << report.rules_regular << " regular + "
      << report.rules_non_regular << " non-regular + " << report.rules_undecided
      << " undecided\n";

  out << "\nweak inverses found for regular class representatives:\n";
  for (const vnca::ClassSummary& cls : report.classes) {
    if (const auto* reg = std::get_if<vnca::RegularCertificate>(&cls.certificate)) {
      out << "  " << std::setw(3) << cls.representative << ": sigma " << rule_literal(reg->sigma)
          << (reg->generalized ? "  (generalized)" : "") << "\n";
    }
  }
  out << "\nwitnesses found for non-regular class representatives:\n";
  for (const vnca::ClassSummary& cls : report.classes) {
    if (const auto* wit = std::get_if<vnca::NonRegularCertificate>(&cls.certificate)) {
      out << "  " << std::setw(3) << cls.representative << ": period " << wit->witness_period
          << " cells " << wit->witness.to_string() << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  std::size_t total = 0, failed = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ++total;
    bool ok = false;
    std::string reason;
    try {
      ok = vnca::verify_record(vnca::parse_record_line(line));
      if (!ok) reason = "certificate failed re-verification";
    } catch (const std::exception& e) {
      reason = e.what();
    }
    if (!ok) {
      ++failed;
      std::cout << "line " << line_number << ": FAIL (" << reason << ")\n";
    }
  }
  std::cout << "verified " << total << " records: " << (total - failed) << " ok, " << failed
            << " failed\n";
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

std::string mask_elements_string(vnca::finite::ElementMask mask, int order) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i = 0; i < order; ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) out << " ";
    out << i;
    first = false;
  }
  out << "}";
  return out.str();
}

int run_finite(const std::string& group_spec, unsigned q, bool enumerate, bool certificates,
               std::size_t max_configs, const OutputOptions& opts) {
  namespace fca = vnca::finite;
  const fca::FiniteGroup group = fca::parse_group_spec(group_spec);
  const fca::ConfigSpace space(group, q);
  const fca::BoxDecomposition boxes = fca::compute_boxes(space);
  const vnca::BigInt r_formula = fca::stabilizer_preserving_size_formula(space);
  const vnca::BigInt r_images = fca::stabilizer_preserving_size_by_images(space);

  std::optional<std::vector<fca::EquivariantMap>> maps;
  std::size_t regular_count = 0;
  std::size_t preserving_count = 0;
  if (enumerate) {
    maps = fca::enumerate_ca(space, max_configs);
    for (const fca::EquivariantMap& map : *maps) {
      if (fca::is_regular(space, map)) {
        ++regular_count;
        if (!fca::weak_inverse(space, map)) {
          std::cerr << "internal error: regular map without a weak inverse\n";
          return kExitVerificationFailed;
        }
      }
      if (fca::preserves_stabilizers(space, map)) ++preserving_count;
    }
  }

  Sink sink(opts.out_path);
  std::ostream& out = sink.stream();

  if (opts.format == "records") {
    Json j;
    j["schema"] = vnca::kCertificateSchemaVersion;
    j["kind"] = "finite_report";
    j["group"] = group_spec;
    j["order"] = group.order();
    j["q"] = q;
    Json box_list = Json::array();
    for (std::size_t i = 0; i < boxes.boxes.size(); ++i) {
      const fca::Box& box = boxes.boxes[i];
      const fca::SubgroupClass& cls = boxes.classes[i];
      box_list.push_back(Json{{"subgroup", cls.representative.elements},
                              {"order", cls.representative.elements.size()},
                              {"quotient", cls.quotient_order},
                              {"orbit_size", box.orbit_size},
                              {"configs", box.config_count},
                              {"orbits", box.orbit_count}});
    }
    j["boxes"] = std::move(box_list);
    j["r_formula"] = r_formula.str();
    j["r_images"] = r_images.str();
    if (maps) {
      j["maps"] = maps->size();
      j["regular_maps"] = regular_count;
      j["r_enumerated"] = preserving_count;
    }
    out << j.dump() << "\n";
  } else {
    out << "group " << group_spec << ", order " << group.order() << ", alphabet " << q
        << ", configurations " << space.size() << "\n\n";
    out << " class | |H| | N/H | orbit | configs | orbits | H\n";
    out << "-------+-----+-----+-------+---------+--------+------------\n";
    for (std::size_t i = 0; i < boxes.boxes.size(); ++i) {
      const fca::Box& box = boxes.boxes[i];
      const fca::SubgroupClass& cls = boxes.classes[i];
      out << " " << std::setw(5) << i << " | " << std::setw(3)
          << cls.representative.elements.size() << " | " << std::setw(3) << cls.quotient_order
          << " | " << std::setw(5) << box.orbit_size << " | " << std::setw(7) << box.config_count
          << " | " << std::setw(6) << box.orbit_count << " | "
          << mask_elements_string(cls.representative.mask, group.order()) << "\n";
    }
    out << "\nstabilizer-preserving submonoid |R|:\n";
    out << "  wreath-product formula: " << r_formula << "\n";
    out << "  image counting:         " << r_images << "  "
        << (r_formula == r_images ? "[match]" : "[MISMATCH]") << "\n";
    if (maps) {
      out << "\nequivariant maps (exhaustive): " << maps->size() << "\n";
      out << "  vN-regular: " << regular_count
          << "  (every regular map re-verified with a constructed weak inverse)\n";
      out << "  stabilizer-preserving: " << preserving_count << "  "
          << (vnca::BigInt(preserving_count) == r_formula ? "[matches formula]" : "[MISMATCH]")
          << "\n";
      if (certificates) {
        out << "\nper-map certificates:\n";
        for (std::size_t m = 0; m < maps->size(); ++m) {
          const fca::EquivariantMap& map = (*maps)[m];
          out << "  map " << m << ": images";
          for (std::uint32_t img : map.images) out << " " << img;
          if (auto witness = fca::nonregularity_witness(space, map)) {
            out << " | non-regular, witness config " << *witness << "\n";
          } else {
            const auto inverse = fca::weak_inverse(space, map);
            out << " | regular, weak inverse images";
            for (std::uint32_t img : inverse->images) out << " " << img;
            out << "\n";
          }
        }
      }
    }
  }

  if (r_formula != r_images) return kExitVerificationFailed;
  if (maps && vnca::BigInt(preserving_count) != r_formula) return kExitVerificationFailed;
  return kExitOk;
}

std::vector<std::uint32_t> parse_coeff_csv(const std::string& csv) {
  std::vector<std::uint32_t> coeffs;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--poly", "invalid coefficient: " + item);
    }
  }
  if (coeffs.empty()) throw CLI::ValidationError("--poly", "empty coefficient list");
  return coeffs;
}

std::string factorization_string(const vnca::linear::CyclotomicFactorization& factorization) {
  std::ostringstream out;
  for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
    const auto& f = factorization.factors[i];
    if (i > 0) out << " ";
    out << "(" << vnca::linear::to_string(f.factor) << ")";
    if (f.multiplicity > 1) out << "^" << f.multiplicity;
  }
  return out.str();
}

int run_linear_count(std::uint32_t n, std::uint32_t p, bool brute, const OutputOptions& opts) {
  namespace lin = vnca::linear;
  const lin::CyclotomicFactorization factorization = lin::factor_xn_minus_one(n, p);
  const vnca::BigInt regular = lin::count_regular_elements(factorization);
  vnca::BigInt total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= p;
  std::optional<std::uint64_t> brute_count;
  if (brute) brute_count = lin::brute_force_regular_count(n, p);

  Sink sink(opts.out_path);
  std::ostream& out = sink.stream();
  if (opts.format == "records") {
    Json j;
    j["schema"] = vnca::kCertificateSchemaVersion;
    j["kind"] = "linear_count";
    j["n"] = n;
    j["p"] = p;
    Json factors = Json::array();
    for (const auto& f : factorization.factors) {
      factors.push_back(Json{{"poly", f.factor.coeffs()}, {"multiplicity", f.multiplicity},
                             {"degree", f.degree}});
    }
    j["factors"] = std::move(factors);
    j["regular"] = regular.str();
    j["total"] = total.str();
    if (brute_count) j["brute"] = *brute_count;
    out << j.dump() << "\n";
  } else {
    out << "x^" << n << " - 1 over F_" << p << " factors as " << factorization_string(factorization)
        << "\n";
    out << "vN-regular elements in F_" << p << "[x]/(x^" << n << " - 1): " << regular << " of "
        << total << "\n";
    if (brute_count) {
      out << "brute-force cross-check: " << *brute_count << "  "
          << (vnca::BigInt(*brute_count) == regular ? "[match]" : "[MISMATCH]") << "\n";
    }
  }
  if (brute_count && vnca::BigInt(*brute_count) != regular) return kExitVerificationFailed;
  return kExitOk;
}

int run_linear_check(std::uint32_t n, std::uint32_t p, const std::string& poly_csv,
                     const OutputOptions& opts) {
  namespace lin = vnca::linear;
  const lin::CyclotomicFactorization factorization = lin::factor_xn_minus_one(n, p);
  const lin::RingElement a = lin::ring_element(p, n, parse_coeff_csv(poly_csv));
  const lin::RegularityCheck check = lin::is_regular_element(a, factorization);
  const bool nilpotent = lin::is_nilpotent(a, factorization);

  Sink sink(opts.out_path);
  std::ostream& out = sink.stream();

  std::vector<std::uint32_t> inverse_coeffs;
  if (check.inverse) {
    inverse_coeffs = check.inverse->value.coeffs();
    inverse_coeffs.resize(n, 0);  // print all n coefficients
  }

  if (opts.format == "records") {
    Json j;
    j["schema"] = vnca::kCertificateSchemaVersion;
    j["kind"] = "linear_check";
    j["n"] = n;
    j["p"] = p;
    std::vector<std::uint32_t> coeffs = a.value.coeffs();
    coeffs.resize(n, 0);
    j["poly"] = coeffs;
    j["regular"] = check.regular;
    j["nilpotent"] = nilpotent;
    if (check.inverse) j["inverse"] = inverse_coeffs;
    out << j.dump() << "\n";
  } else {
    out << "element " << lin::to_string(a.value) << " in F_" << p << "[x]/(x^" << n << " - 1)\n";
    out << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
    if (check.regular) {
      std::ostringstream csv;
      for (std::size_t i = 0; i < inverse_coeffs.size(); ++i) {
        if (i > 0) csv << ",";
        csv << inverse_coeffs[i];
      }
      out << "vN-regular: yes, generalized inverse " << lin::to_string(check.inverse->value)
          << " (coefficients " << csv.str() << ")\n";
    } else {
      out << "vN-regular: no\n";
    }
  }
  return kExitOk;
}

int run_counterexample(const OutputOptions& opts) {
  const vnca::CounterexampleBundle bundle = vnca::build_counterexample();
  const auto* cert = std::get_if<vnca::NonRegularCertificate>(&bundle.certificate);
  if (cert == nullptr) {
    std::cerr << "internal error: counterexample certificate is not NonRegular\n";
    return kExitVerificationFailed;
  }

  Sink sink(opts.out_path);
  std::ostream& out = sink.stream();
  if (opts.format == "records") {
    vnca::CertificateRecord record{bundle.tau, std::nullopt, std::nullopt, bundle.certificate,
                                   vnca::SearchBounds{0, 1}};
    out << vnca::record_line(record) << "\n";
  } else {
    const vnca::PeriodicConfig zero = vnca::PeriodicConfig::constant(2, 0);
    const vnca::PeriodicConfig alternating = vnca::PeriodicConfig::from_string(2, "01");
    out << "non-regular composition over the line, binary alphabet\n";
    out << "  tau1 = " << rule_literal(bundle.tau1) << "  (keep the centre iff all three agree)\n";
    out << "  tau2 = " << rule_literal(bundle.tau2) << "  (flip the all-zero window)\n";
    out << "  tau  = tau2 then tau1 = " << rule_literal(bundle.tau) << "\n";
    out << "  (constant 0) tau = constant " << static_cast<int>(apply(bundle.tau, zero).cell(0))
        << "\n";
    out << "  (01-periodic) tau = " << apply(bundle.tau, alternating).to_string() << "\n";
    out << "  certificate: non_regular, witness period " << cert->witness_period << " cells "
        << cert->witness.to_string() << "\n";
    out << "  re-verified: "
        << (vnca::verify_certificate(bundle.tau, bundle.certificate) ? "yes" : "NO") << "\n";
  }
  return vnca::verify_certificate(bundle.tau, bundle.certificate) ? kExitOk
                                                                  : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide, certify and count von Neumann regular cellular automata"};
  app.require_subcommand(1);

  // classify
  vnca::SearchBounds bounds;
  int threads = 1;
  OutputOptions classify_out;
  CLI::App* classify = app.add_subcommand("classify", "classify the 256 elementary rules");
  classify->add_option("--max-radius", bounds.max_radius, "largest inverse search radius (1 or 2)")
      ->check(CLI::Range(1, 2))
      ->envname("VNCA_MAX_RADIUS")
      ->capture_default_str();
  classify->add_option("--max-period", bounds.max_period, "largest witness period")
      ->check(CLI::Range(1, 16))
      ->envname("VNCA_MAX_PERIOD")
      ->capture_default_str();
  classify->add_option("--threads", threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->envname("VNCA_THREADS")
      ->capture_default_str();
  add_output_options(classify, classify_out);

  // verify
  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("file", verify_path, "certificate file, one JSON record per line")
      ->required();

  // finite
  std::string group_spec;
  unsigned finite_q = 2;
  bool finite_enumerate = false;
  bool finite_certificates = false;
  std::size_t finite_max_configs = 16;
  OutputOptions finite_out;
  CLI::App* finite = app.add_subcommand("finite", "boxes and |R| over a finite group");
  finite->add_option("group", group_spec, "zn:<n>, s3, d4, klein4 or cayley:<file>")->required();
  finite->add_option("--q", finite_q, "alphabet size")
      ->check(CLI::Range(2u, 64u))
      ->capture_default_str();
  finite->add_flag("--enumerate", finite_enumerate,
                   "exhaustively enumerate equivariant maps (tiny instances)");
  finite->add_flag("--certificates", finite_certificates,
                   "with --enumerate, print a certificate per map");
  finite->add_option("--max-configs", finite_max_configs,
                     "configuration cap for --enumerate")
      ->capture_default_str();
  add_output_options(finite, finite_out);

  // linear
  CLI::App* linear = app.add_subcommand("linear", "linear rules over a cyclic group");
  linear->require_subcommand(1);
  std::uint32_t linear_n = 0, linear_p = 0;
  bool linear_brute = false;
  std::string linear_poly;
  OutputOptions linear_count_out, linear_check_out;
  CLI::App* linear_count = linear->add_subcommand("count", "count the vN-regular elements");
  linear_count->add_option("--n", linear_n, "cyclic group order")->required()->check(CLI::Range(1u, 64u));
  linear_count->add_option("--p", linear_p, "field characteristic (prime)")->required();
  linear_count->add_flag("--brute", linear_brute, "cross-check with the brute-force oracle");
  add_output_options(linear_count, linear_count_out);
  CLI::App* linear_check = linear->add_subcommand("check", "check one element for regularity");
  linear_check->add_option("--n", linear_n, "cyclic group order")->required()->check(CLI::Range(1u, 64u));
  linear_check->add_option("--p", linear_p, "field characteristic (prime)")->required();
  linear_check->add_option("--poly", linear_poly, "coefficients, lowest degree first, e.g. 1,1")
      ->required();
  add_output_options(linear_check, linear_check_out);

  // counterexample
  OutputOptions counterexample_out;
  CLI::App* counterexample =
      app.add_subcommand("counterexample", "the canonical non-regular composed rule");
  add_output_options(counterexample, counterexample_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return run_classify(bounds, threads, classify_out);
    if (verify->parsed()) return run_verify(verify_path);
    if (finite->parsed()) {
      return run_finite(group_spec, finite_q, finite_enumerate, finite_certificates,
                        finite_max_configs, finite_out);
    }
    if (linear->parsed()) {
      if (linear_count->parsed()) {
        return run_linear_count(linear_n, linear_p, linear_brute, linear_count_out);
      }
      return run_linear_check(linear_n, linear_p, linear_poly, linear_check_out);
    }
    if (counterexample->parsed()) return run_counterexample(counterexample_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
