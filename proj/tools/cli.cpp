#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "scs/bounds.hpp"
#include "scs/cfr.hpp"
#include "scs/constructions.hpp"
#include "scs/core.hpp"
#include "scs/io.hpp"
#include "scs/spectral.hpp"

namespace scs::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v, const char* fmt = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Tolerance for exact-zero claims: --tol, then SCS_TOL, then the library default.
double resolve_tol(std::optional<double> flag) {
  if (flag) {
    if (!(*flag > 0)) throw UsageError("--tol must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("SCS_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw UsageError("SCS_TOL must be a positive number");
    return v;
  }
  return kZeroTol;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

// Writes <output>.config.json; `scsgen replay` on it reproduces the output.
void echo_config(const std::string& output, const std::vector<std::string>& args, double tol) {
  std::vector<std::string> argv(args.begin() + 1, args.end());
  if (std::find(argv.begin(), argv.end(), "--tol") == argv.end()) {
    argv.push_back("--tol");
    argv.push_back(num(tol, "%.17g"));
  }
  json j;
  j["program"] = "scsgen";
  j["version"] = kVersion;
  j["args"] = argv;
  j["tol"] = tol;
  open_out(output + ".config.json") << j.dump(2) << '\n';
}

Cfr load_cfr(const std::string& path) {
  auto in = open_in(path);
  return read_cfr(in);
}

ScsFamily load_family(const std::string& path) {
  auto in = open_in(path);
  return io::read_family(in);
}

constructions::ComplexMatrix load_matrix(const std::string& path) {
  auto in = open_in(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw io::FormatError(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw io::FormatError("matrix must be a nonempty array of rows");
  constructions::ComplexMatrix h;
  h.rows = static_cast<int>(j.size());
  h.cols = static_cast<int>(j.front().size());
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != h.cols) throw io::FormatError("matrix rows are ragged");
    for (const auto& v : row) {
      if (!v.is_array() || v.size() != 2) throw io::FormatError("matrix entries must be [re, im] pairs");
      h.data.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
  }
  return h;
}

// ---------------------------------------------------------------- gen-cfr

struct GenCfrArgs {
  std::optional<int> prime;
  std::optional<int> search;
  std::optional<int> rows;
  std::uint64_t budget = 100'000'000;
  std::optional<std::string> out;
  std::optional<double> tol;
};

void add_gen_cfr(CLI::App& app, GenCfrArgs& a) {
  auto* prime = app.add_option("--prime", a.prime, "multiplication-table CFR of Z_p");
  auto* search = app.add_option("--search", a.search, "search for a CFR of order N");
  auto* rows = app.add_option("--rows", a.rows, "number of rows to search for");
  app.add_option("--budget", a.budget, "node budget for --search")->capture_default_str();
  app.add_option("-o,--out", a.out, "output file (default: stdout)");
  app.add_option("--tol", a.tol, "zero tolerance");
  prime->excludes(search)->excludes(rows);
  search->needs(rows);
  rows->needs(search);
}

int gen_cfr(const GenCfrArgs& a, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(a.tol);
  std::optional<Cfr> cfr;
  if (a.prime) {
    cfr = cfr_from_prime(*a.prime);
  } else if (a.search) {
    const auto result = search_cfr(*a.search, *a.rows, a.budget);
    err << "search " << *a.rows << "x" << *a.search << ": " << to_string(result.status) << " after "
        << result.nodes << " nodes\n";
    if (result.status == SearchStatus::budget_hit) return kBudget;
    if (result.status == SearchStatus::exhausted) return kNonexistent;
    cfr = *result.cfr;
  } else {
    throw UsageError("gen-cfr needs --prime or --search/--rows");
  }
  const auto text = to_text(*cfr);
  if (a.out) {
    open_out(*a.out) << text;
    echo_config(*a.out, args, tol);
  } else {
    out << text;
  }
  return kOk;
}

// ---------------------------------------------------------------- gen-scs

struct GenScsArgs {
  std::string construction;
  std::optional<std::string> cfr_path;
  std::optional<int> prime;
  std::optional<int> s0;
  std::vector<int> insert;
  std::optional<int> sets;
  std::string h = "dft";
  std::optional<std::string> out;
  std::optional<std::string> corr_dir;
  std::optional<std::string> spectrum_csv;
  std::size_t member = 0;
  std::optional<std::size_t> window;
  std::optional<double> tol;
};

void add_gen_scs(CLI::App& app, GenScsArgs& a) {
  app.add_option("construction", a.construction, "c1, c2, c3 or c4")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4"}));
  auto* cfr = app.add_option("--cfr", a.cfr_path, "CFR text file");
  auto* prime = app.add_option("--prime", a.prime, "use the multiplication-table CFR of Z_p");
  cfr->excludes(prime);
  auto* s0 = app.add_option("--s0", a.s0, "single inserted zero column (c2, c4)");
  auto* insert = app.add_option("--insert", a.insert, "inserted zero columns, comma separated (c3, c4)")
                     ->delimiter(',');
  s0->excludes(insert);
  app.add_option("--K", a.sets, "number of CFR rows used (c4)");
  app.add_option("--H", a.h, "orthogonal matrix for c4: \"dft\" or a JSON file")->capture_default_str();
  app.add_option("-o,--out", a.out, "family JSON output");
  app.add_option("--corr-csv", a.corr_dir, "directory for per-pair correlation CSVs");
  app.add_option("--spectrum-csv", a.spectrum_csv, "spectrum CSV of one member");
  app.add_option("--member", a.member, "member index (set-major) for --spectrum-csv")->capture_default_str();
  app.add_option("--window", a.window, "correlation window (default L)");
  app.add_option("--tol", a.tol, "zero tolerance");
}

ScsFamily build_family(const GenScsArgs& a) {
  if (!a.cfr_path && !a.prime) throw UsageError("gen-scs needs --cfr or --prime");
  const Cfr cfr = a.cfr_path ? load_cfr(*a.cfr_path) : cfr_from_prime(*a.prime);
  const auto& c = a.construction;
  if (c == "c1") {
    if (a.s0 || !a.insert.empty()) throw UsageError("c1 takes no insert positions");
    return constructions::construction1(cfr);
  }
  if (c == "c2") {
    if (!a.s0) throw UsageError("c2 needs --s0");
    return constructions::construction2(cfr, *a.s0);
  }
  if (c == "c3") {
    if (a.insert.empty()) throw UsageError("c3 needs --insert");
    return constructions::construction3(cfr, a.insert);
  }
  std::vector<int> insert = a.insert;
  if (a.s0) insert = {*a.s0};
  if (insert.empty()) throw UsageError("c4 needs --s0 or --insert");
  if (a.h == "dft") return constructions::construction4(cfr, insert, a.sets);
  return constructions::construction4(cfr, load_matrix(a.h), insert, a.sets, "file:" + fs::path(a.h).filename().string());
}

struct Measured {
  double theta_a = 0;     // largest autocorrelation sidelobe
  double intra = 0;       // largest intra-set cross-correlation
  double theta_c = 0;     // largest cross-correlation of any kind
  double interset = 0;
  double theta_max = 0;
  std::size_t zcz = 0;    // smallest per-set ZCZ width
  bool has_intra = false;
  bool has_interset = false;
};

Measured measure(const ScsFamily& family, std::optional<std::size_t> window, double tol) {
  const auto s = spectral::summarize(family, window, tol);
  Measured m;
  m.zcz = family.length();
  for (const auto& set : s.sets) {
    m.theta_a = std::max(m.theta_a, set.theta_a);
    m.intra = std::max(m.intra, set.theta_c);
    m.zcz = std::min(m.zcz, set.zcz_width);
  }
  m.has_intra = family.set_size() > 1;
  m.has_interset = s.has_interset;
  m.interset = s.theta_c;
  m.theta_c = std::max(m.intra, m.interset);
  m.theta_max = s.theta_max;
  return m;
}

void print_summary(std::ostream& out, const ScsFamily& f, const Measured& m, std::size_t window, double tol) {
  // Values within the zero tolerance are reported as exact zeros.
  auto val = [tol](double v) { return num(v <= tol ? 0.0 : v); };
  auto line = [&out](const char* key, const std::string& value) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%-14s", key);
    out << buf << value << '\n';
  };
  if (f.info()) line("construction", f.info()->name);
  line("L", std::to_string(f.length()));
  line("K", std::to_string(f.set_count()));
  line("M", std::to_string(f.set_size()));
  line("n", std::to_string(f.constraint().n()));
  line("omega", io::format_omega(f.constraint()));
  line("power", num(f.constraint().admissible_power()));
  line("alphabet", f.alphabet_order() ? std::to_string(*f.alphabet_order()) : std::string("-"));
  line("window", std::to_string(window));
  line("theta_a", val(m.theta_a));
  line("theta_c", m.has_intra || m.has_interset ? val(m.theta_c) : std::string("-"));
  line("interset", m.has_interset ? val(m.interset) : std::string("-"));
  line("theta_max", val(m.theta_max));
  line("Z", m.has_intra ? std::to_string(m.zcz) : std::string("-"));
}

int gen_scs(const GenScsArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(a.tol);
  const auto family = build_family(a);
  const auto m = measure(family, a.window, tol);
  print_summary(out, family, m, a.window.value_or(family.length()), tol);

  if (a.out) {
    auto file = open_out(*a.out);
    io::write_family(file, family);
    echo_config(*a.out, args, tol);
  }
  const auto members = family.members();
  if (a.spectrum_csv) {
    if (a.member >= members.size()) throw UsageError("--member out of range");
    const auto report = spectral::check_spectrum(members[a.member], family.constraint(), tol);
    auto file = open_out(*a.spectrum_csv);
    io::write_spectrum_csv(file, report, family.constraint());
    echo_config(*a.spectrum_csv, args, tol);
  }
  if (a.corr_dir) {
    fs::create_directories(*a.corr_dir);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j) {
        const auto path = fs::path(*a.corr_dir) / ("theta_" + std::to_string(i) + "_" + std::to_string(j) + ".csv");
        auto file = open_out(path.string());
        io::write_profile_csv(file, spectral::pccf_fast(members[i], members[j]));
      }
    echo_config((fs::path(*a.corr_dir) / "correlations").string(), args, tol);
  }
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::optional<std::string> family;
  std::optional<int> M, L, n, K, window, Z, N;
  std::optional<double> theta_a, theta_c, theta_max, interset;
  std::optional<std::string> json_out;
  std::optional<double> tol;
};

void add_bounds(CLI::App& app, BoundsArgs& a) {
  auto* family = app.add_option("--family", a.family, "family JSON; measured values are computed");
  auto* M = app.add_option("--M", a.M, "sequences per set");
  auto* L = app.add_option("--L", a.L, "sequence length");
  auto* n = app.add_option("--n", a.n, "number of forbidden carriers");
  app.add_option("--K", a.K, "number of sets");
  app.add_option("--window", a.window, "correlation window (default L)");
  app.add_option("--Z", a.Z, "measured ZCZ width");
  app.add_option("--N", a.N, "CFR order, shown in the table");
  app.add_option("--theta-a", a.theta_a, "measured autocorrelation sidelobe maximum");
  app.add_option("--theta-c", a.theta_c, "measured intra-set cross-correlation maximum");
  app.add_option("--theta-max", a.theta_max, "measured family maximum");
  app.add_option("--interset", a.interset, "measured inter-set cross-correlation maximum");
  app.add_option("--json", a.json_out, "write the JSON report here (\"-\" for stdout)");
  app.add_option("--tol", a.tol, "zero tolerance used when measuring a family");
  family->excludes(M)->excludes(L)->excludes(n);
}

std::string table_header() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%6s %8s %6s %12s %12s %9s\n", "N", "length", "F~", "theta_max", "theta_opti", "eta");
  return buf;
}

std::string table_row(std::optional<int> order, int length, int sets, std::optional<double> theta_max,
                      double theta_opti, std::optional<double> eta) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%6s %8d %6d %12s %12s %9s\n", order ? std::to_string(*order).c_str() : "-", length,
                sets, theta_max ? num(*theta_max, "%.4f").c_str() : "-", num(theta_opti, "%.4f").c_str(),
                eta ? num(*eta, "%.4f").c_str() : "-");
  return buf;
}

std::string verdict_line(const char* label, const std::optional<bounds::Verdict>& v, const char* bound_name,
                         double bound) {
  std::string s = std::string(label) + ": ";
  if (!v) return s + "not judged\n";
  s += bounds::to_string(*v);
  if (*v == bounds::Verdict::optimal) s += std::string(" (= ") + bound_name + " = " + num(bound) + ")";
  else s += std::string(" (bound ") + bound_name + " = " + num(bound) + ")";
  return s + '\n';
}

int cmd_bounds(const BoundsArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  bounds::BoundsInput in;
  std::optional<int> order = a.N;
  if (a.family) {
    const double tol = resolve_tol(a.tol);
    const auto family = load_family(*a.family);
    const auto w = a.window ? std::optional<std::size_t>(static_cast<std::size_t>(std::max(*a.window, 0)))
                            : std::nullopt;
    const auto m = measure(family, w, tol);
    in.L = static_cast<int>(family.length());
    in.n = static_cast<int>(family.constraint().n());
    in.M = static_cast<int>(family.set_size());
    in.K = static_cast<int>(family.set_count());
    in.window = a.window;
    in.theta_a = m.theta_a;
    if (m.has_intra) {
      in.theta_c = m.intra;
      in.zcz_width = static_cast<int>(m.zcz);
    }
    in.theta_max = m.theta_max;
    if (m.has_interset) in.interset = m.interset;
    if (!order && family.info()) order = family.info()->order;
  } else {
    if (!a.M || !a.L || !a.n) throw UsageError("bounds needs --family or all of --M, --L, --n");
    in.L = *a.L;
    in.n = *a.n;
    in.M = *a.M;
    in.K = a.K.value_or(1);
    in.window = a.window;
    in.theta_a = a.theta_a;
    in.theta_c = a.theta_c;
    in.theta_max = a.theta_max;
    in.interset = a.interset;
    in.zcz_width = a.Z;
  }
  const auto r = bounds::evaluate(in);

  out << table_header() << table_row(order, in.L, in.M * in.K, in.theta_max, r.theta_opti, r.eta);
  out << "theta_a lower bound  " << num(r.theta_a_lb) << '\n';
  out << "theta_c lower bound  " << num(r.theta_c_lb) << '\n';
  if (r.tsai)
    out << "window inequality    " << (r.tsai->satisfied ? "satisfied" : "VIOLATED") << " (" << num(r.tsai->lhs)
        << " >= " << num(r.tsai->rhs) << ")\n";
  if (r.combined)
    out << "combined inequality  " << (r.combined->satisfied ? "satisfied" : "VIOLATED") << " ("
        << num(r.combined->lhs) << " >= " << num(r.combined->rhs) << ")\n";
  if (r.zcz)
    out << "zcz tradeoff         " << bounds::to_string(*r.zcz) << " (L-n = " << r.zcz_capacity
        << ", MZ = " << in.M * *in.zcz_width << ")\n";
  if (in.theta_max) out << verdict_line("theta_max", r.theta_max_verdict, "theta_opti", r.theta_opti);
  if (in.theta_a) out << verdict_line("theta_a", r.theta_a_verdict, "theta_a bound", r.theta_a_lb);
  if (in.interset) out << verdict_line("inter-set", r.interset_verdict, "L/√(L−n)", r.interset_lb);

  if (a.json_out) {
    const auto text = io::bounds_report_json(r) + "\n";
    if (*a.json_out == "-") {
      out << text;
    } else {
      open_out(*a.json_out) << text;
      echo_config(*a.json_out, args, resolve_tol(a.tol));
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::optional<std::string> family;
  std::optional<std::string> cfr;
  std::optional<std::string> sequence;
  std::vector<std::size_t> omega;
  bool unimodular = false;
  std::optional<double> tol;
};

void add_verify(CLI::App& app, VerifyArgs& a) {
  auto* family = app.add_option("--family", a.family, "family JSON");
  auto* cfr = app.add_option("--cfr", a.cfr, "CFR text file");
  auto* seq = app.add_option("--sequence", a.sequence, "time-domain sequence JSON");
  app.add_option("--omega", a.omega, "forbidden carriers for --sequence, comma separated")->delimiter(',');
  app.add_flag("--unimodular", a.unimodular, "also require |u_t| = 1 for --sequence");
  app.add_option("--tol", a.tol, "zero tolerance");
  family->excludes(cfr)->excludes(seq);
  cfr->excludes(seq);
}

class Checks {
 public:
  void add(std::string name, bool pass, json detail) {
    checks_.push_back({{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}});
    all_ &= pass;
  }
  int emit(std::ostream& out, const std::string& target) const {
    json j;
    j["target"] = target;
    j["checks"] = checks_;
    j["pass"] = all_;
    out << j.dump(2) << '\n';
    return all_ ? kOk : kVerifyFailed;
  }

 private:
  json checks_ = json::array();
  bool all_ = true;
};

void check_spectra(Checks& checks, const std::vector<ComplexSeq>& members, const SpectralConstraint& constraint,
                   double tol) {
  double leakage = 0;
  double deviation = 0;
  std::size_t worst = 0;
  bool pass = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto r = spectral::check_spectrum(members[i], constraint, tol);
    if (std::max(r.max_leakage, r.max_deviation) > std::max(leakage, deviation)) worst = i;
    leakage = std::max(leakage, r.max_leakage);
    deviation = std::max(deviation, r.max_deviation);
    pass &= r.pass;
  }
  checks.add("uniform_power", pass,
             {{"max_leakage", leakage}, {"max_deviation", deviation}, {"worst_member", worst}, {"tol", tol}});
}

void check_unimodular(Checks& checks, const std::vector<ComplexSeq>& members, double tol) {
  double dev = 0;
  for (const auto& s : members)
    for (const auto& v : s.values()) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
  checks.add("unimodular", dev <= tol, {{"max_deviation", dev}, {"tol", tol}});
}

void check_alphabet(Checks& checks, const std::vector<ComplexSeq>& members, int order) {
  double worst = 0;
  for (const auto& s : members)
    for (const auto& v : s.values()) {
      const double k = std::arg(v) * order / (2 * std::numbers::pi);
      worst = std::max(worst, std::abs(k - std::round(k)));
    }
  checks.add("alphabet", worst <= 1e-6, {{"order", order}, {"max_phase_offset", worst}});
}

int verify_family(const VerifyArgs& a, std::ostream& out) {
  const double tol = resolve_tol(a.tol);
  const auto family = load_family(*a.family);
  const auto members = family.members();
  Checks checks;
  check_spectra(checks, members, family.constraint(), tol);
  if (family.alphabet_order()) {
    check_unimodular(checks, members, tol);
    check_alphabet(checks, members, *family.alphabet_order());
  }

  double worst = 0;
  bool sos = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const auto r = spectral::sum_of_squares_check(members[i], members[j], family.constraint(), 1e-9, tol);
      worst = std::max(worst, std::abs(r.lhs - r.rhs) / r.rhs);
      sos &= r.pass;
    }
  checks.add("sum_of_squares", sos, {{"max_relative_error", worst}, {"rel_tol", 1e-9}});

  if (family.info() && family.info()->name == "c4") {
    std::size_t z = family.length();
    for (const auto& set : family.sets()) z = std::min(z, spectral::zcz_width(set, tol));
    const auto order = static_cast<std::size_t>(family.info()->order);
    checks.add("zcz", z >= order, {{"min_width", z}, {"required", order}});
  }
  return checks.emit(out, *a.family);
}

int verify_cfr_file(const VerifyArgs& a, std::ostream& out) {
  auto in = open_in(*a.cfr);
  const auto rows = parse_cfr_rows(in);
  Checks checks;
  const auto verdict = verify_cfr(rows);
  json detail = json::object();
  if (verdict.violation) {
    const auto& v = *verdict.violation;
    detail = {{"kind", v.kind == CfrViolation::Kind::not_permutation ? "not_permutation" : "repeated_pair"},
              {"rows", {v.row_i, v.row_j}}, {"positions", {v.x, v.y}}, {"step", v.step}};
  }
  checks.add("cfr_axioms", verdict.ok(), detail);
  if (verdict.ok()) {
    const Cfr cfr(rows);
    const InverseRows inv(cfr);
    bool lemma4 = true;
    bool lemma5 = true;
    for (int i = 0; i < cfr.row_count(); ++i)
      for (int r = 0; r < cfr.row_count(); ++r) {
        if (i == r) continue;
        for (int l = 0; l < cfr.order(); ++l) lemma4 &= check_lemma4(cfr, i, r, l) == 1;
        lemma5 &= inv.difference_is_permutation(i, r);
      }
    checks.add("single_coincidence", lemma4, json::object());
    checks.add("inverse_difference_permutation", lemma5, json::object());
  }
  return checks.emit(out, *a.cfr);
}

int verify_sequence(const VerifyArgs& a, std::ostream& out) {
  const double tol = resolve_tol(a.tol);
  auto in = open_in(*a.sequence);
  const auto seq = io::read_sequence(in);
  if (seq.domain() != Domain::time) throw UsageError("--sequence expects a time-domain sequence");
  const SpectralConstraint constraint(seq.size(), a.omega);
  Checks checks;
  check_spectra(checks, {seq}, constraint, tol);
  if (a.unimodular) check_unimodular(checks, {seq}, tol);
  return checks.emit(out, *a.sequence);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.family) return verify_family(a, out);
  if (a.cfr) return verify_cfr_file(a, out);
  if (a.sequence) return verify_sequence(a, out);
  throw UsageError("verify needs --family, --cfr or --sequence");
}

// ---------------------------------------------------------------- ladder

struct LadderArgs {
  std::vector<int> primes{5, 7, 11, 13, 31, 61};
  std::optional<double> tol;
};

int cmd_ladder(const LadderArgs& a, std::ostream& out) {
  const double tol = resolve_tol(a.tol);
  std::vector<bounds::LadderPoint> points;
  for (int p : a.primes) {
    const auto family = constructions::construction1(cfr_from_prime(p));
    const auto s = spectral::summarize(family, std::nullopt, tol);
    points.push_back({p, static_cast<int>(family.set_count()), s.theta_max, 0.0});
  }
  const auto report = bounds::optimality_ladder(points);
  out << table_header();
  for (const auto& pt : report.points) {
    const int L = pt.order * (pt.order + 1);
    out << table_row(pt.order, L, pt.set_count, pt.theta_max, bounds::liu_bound(pt.set_count, L, pt.order), pt.eta);
  }
  out << "eta strictly decreasing: " << (report.strictly_decreasing ? "yes" : "no") << '\n';
  return report.strictly_decreasing ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrally constrained sequence families from circular Florentine rectangles", "scsgen"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenCfrArgs gc;
  GenScsArgs gs;
  BoundsArgs ba;
  VerifyArgs va;
  LadderArgs la;
  std::string replay_path;

  auto* gen_cfr_cmd = app.add_subcommand("gen-cfr", "write a circular Florentine rectangle");
  add_gen_cfr(*gen_cfr_cmd, gc);
  auto* gen_scs_cmd = app.add_subcommand("gen-scs", "construct a sequence family and summarize it");
  add_gen_scs(*gen_scs_cmd, gs);
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate correlation lower bounds");
  add_bounds(*bounds_cmd, ba);
  auto* verify_cmd = app.add_subcommand("verify", "check a family, CFR or sequence");
  add_verify(*verify_cmd, va);
  auto* ladder_cmd = app.add_subcommand("ladder", "optimality factor of c1 over prime orders");
  ladder_cmd->add_option("--primes", la.primes, "prime orders, comma separated")->delimiter(',');
  ladder_cmd->add_option("--tol", la.tol, "zero tolerance");
  auto* replay_cmd = app.add_subcommand("replay", "rerun the command recorded in a .config.json file");
  replay_cmd->add_option("config", replay_path, "config file")->required();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("scsgen");
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cfr_cmd->parsed()) return gen_cfr(gc, storage, out, err);
    if (gen_scs_cmd->parsed()) return gen_scs(gs, storage, out);
    if (bounds_cmd->parsed()) return cmd_bounds(ba, storage, out);
    if (verify_cmd->parsed()) return cmd_verify(va, out);
    if (ladder_cmd->parsed()) return cmd_ladder(la, out);
    if (replay_cmd->parsed()) {
      auto in = open_in(replay_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw io::FormatError(std::string("invalid config: ") + e.what());
      }
      if (!j.contains("args") || !j["args"].is_array()) throw io::FormatError("config has no \"args\" array");
      std::vector<std::string> rerun{storage.front()};
      for (const auto& v : j["args"]) rerun.push_back(v.get<std::string>());
      if (rerun.size() > 1 && rerun[1] == "replay") throw UsageError("config records another replay");
      return run(rerun, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const constructions::UnimodularityError& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace scs::cli
