#include "cli.hpp"

#include "examples.hpp"

#include "hermdiag/classify.hpp"
#include "hermdiag/diffop.hpp"
#include "hermdiag/hermite.hpp"
#include "hermdiag/jensen.hpp"
#include "hermdiag/json_io.hpp"
#include "hermdiag/laguerre.hpp"
#include "hermdiag/sequence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hermdiag::cli {

namespace {

using nlohmann::json;

/// Bad flags or values; reported with kind "invalid_config".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string seq_name;
  std::string factored;
  std::string seq_file;
  std::string alpha = "1";
  std::size_t kmax = 10;
  std::size_t p = 0;
  std::string out_path;
  std::string format;
  std::size_t histogram = 0;
  std::string example_id = "all";
  bool serial = false;
};

Execution execution(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

// "sigma=1/2;zeros=1,1;c=1;m=0"; omitted keys keep their defaults.
FactoredSpec parse_factored(const std::string& text) {
  FactoredSpec spec;
  for (const auto& field : split(text, ';')) {
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ConfigError("--factored: expected key=value, got '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "c") {
      spec.c = parse_flag_rational("--factored c", value);
    } else if (key == "sigma") {
      spec.sigma = parse_flag_rational("--factored sigma", value);
    } else if (key == "m") {
      const Rational m = parse_flag_rational("--factored m", value);
      if (m < 0 || m.get_den() != 1) throw ConfigError("--factored m must be a nonnegative integer");
      spec.m = m.get_num().get_ui();
    } else if (key == "zeros") {
      for (const auto& z : split(value, ',')) {
        if (!z.empty()) spec.zeros.push_back(parse_flag_rational("--factored zeros", z));
      }
    } else {
      throw ConfigError("--factored: unknown key '" + key + "' (use c, m, sigma, zeros)");
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--factored: ") + e.what());
  }
  return spec;
}

int selector_count(const Options& o) {
  return static_cast<int>(!o.seq_name.empty()) + static_cast<int>(!o.factored.empty()) +
         static_cast<int>(!o.seq_file.empty());
}

GammaSeq select_sequence(const Options& o) {
  if (selector_count(o) != 1) throw ConfigError("exactly one of --seq, --factored, --seq-file is required");
  if (!o.seq_name.empty()) {
    try {
      return sequences::by_name(o.seq_name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("--seq: ") + e.what());
    }
  }
  if (!o.factored.empty()) return sequences::factored(parse_factored(o.factored));
  std::ifstream in(o.seq_file);
  if (!in) throw ConfigError("--seq-file: cannot open '" + o.seq_file + "'");
  try {
    return io::sequence_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ConfigError("--seq-file: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--seq-file: " + std::string(e.what()));
  }
}

std::size_t kmax_cap() {
  const char* env = std::getenv("HERMDIAG_KMAX_CAP");
  if (env == nullptr || *env == '\0') return kDefaultKmaxCap;
  try {
    std::size_t used = 0;
    const unsigned long cap = std::stoul(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw ConfigError("HERMDIAG_KMAX_CAP must be a nonnegative integer, got '" + std::string(env) + "'");
  }
}

void check_kmax(const Options& o) {
  const std::size_t cap = kmax_cap();
  if (o.kmax > cap) {
    throw ConfigError("--kmax " + std::to_string(o.kmax) + " exceeds the cap " + std::to_string(cap) +
                      " (HERMDIAG_KMAX_CAP)");
  }
}

HermiteParam select_alpha(const Options& o, bool strictly_positive) {
  const Rational a = parse_flag_rational("--alpha", o.alpha);
  if (a < 0 || (strictly_positive && a == 0)) {
    throw ConfigError(std::string("--alpha must be ") + (strictly_positive ? "> 0" : ">= 0") + ", got " +
                      a.get_str());
  }
  return HermiteParam(a);
}

/// Data goes to --out when given (with a one-line summary on stdout),
/// otherwise straight to stdout.
void emit(const Options& o, const std::string& data, const std::string& summary, std::ostream& out) {
  if (o.out_path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw ConfigError("--out: cannot write '" + o.out_path + "'");
  file << data;
  out << summary << " -> " << o.out_path << '\n';
}

std::string join_coeffs(const Polynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += p.coeffs()[i].get_str();
  }
  return s;
}

int cmd_qpoly(const Options& o, std::ostream& out) {
  const GammaSeq seq = select_sequence(o);
  const HermiteParam alpha = select_alpha(o, false);
  check_kmax(o);
  const HermiteDiffOp op = build_operator(alpha, seq, o.kmax, o.p, execution(o));
  std::ostringstream data;
  if (o.format == "json") {
    data << io::to_json(op).dump(2) << '\n';
  } else {
    data << "k,degree,coeffs,poly\n";
    for (std::size_t k = 0; k < op.Q.size(); ++k) {
      data << k << ',' << op.Q[k].degree() << ',' << join_coeffs(op.Q[k]) << ',' << op.Q[k].to_string() << '\n';
    }
  }
  emit(o, data.str(), "Q_0..Q_" + std::to_string(o.kmax) + " for " + seq.name(), out);
  return kOk;
}

int cmd_reality(const Options& o, std::ostream& out) {
  const GammaSeq seq = select_sequence(o);
  const HermiteParam alpha = select_alpha(o, true);
  check_kmax(o);
  RealityTable table;
  try {
    table = q_reality_table(alpha, seq, o.kmax, o.p, execution(o));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ostringstream data;
  if (o.format == "json") {
    data << io::to_json(table).dump(2) << '\n';
  } else {
    data << "k,real_rooted,degree,distinct_real_roots,squarefree_degree\n";
    for (const auto& row : table.rows) {
      data << row.k << ',' << (row.real_rooted ? "true" : "false") << ',' << row.degree << ','
           << row.distinct_real_roots << ',' << row.squarefree_degree << '\n';
    }
  }
  const auto first = table.first_non_real();
  emit(o, data.str(),
       "reality table for " + seq.name() + (first ? ", first non-real k=" + std::to_string(*first) : ", all real"),
       out);
  return kOk;
}

int cmd_ratios(const Options& o, std::ostream& out) {
  const GammaSeq seq = select_sequence(o);
  check_kmax(o);
  const auto ratios = ratio_sequence(seq, o.kmax, o.p);
  std::optional<Histogram> hist;
  if (o.histogram > 0) hist = ratio_histogram(ratios, o.histogram);

  std::ostringstream data;
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : ratios) {
      rows.push_back({{"k", r.k},
                      {"value", r.value ? io::to_json(*r.value) : json(nullptr)},
                      {"approx", r.value ? json(to_display_string(*r.value)) : json(nullptr)}});
    }
    json doc = {{"sequence", seq.name()}, {"p", o.p}, {"rows", rows}};
    if (hist) doc["histogram"] = {{"lo", io::to_json(hist->lo)}, {"hi", io::to_json(hist->hi)}, {"counts", hist->counts}};
    data << doc.dump(2) << '\n';
  } else {
    write_ratio_csv(data, ratios);
    if (hist) {
      // Bin i covers [lo + i w, lo + (i+1) w); the last bin is closed.
      const Rational width = (hist->hi - hist->lo) / static_cast<unsigned long>(hist->counts.size());
      data << "\nbin,lo,hi,count\n";
      for (std::size_t i = 0; i < hist->counts.size(); ++i) {
        const Rational lo = hist->lo + width * static_cast<unsigned long>(i);
        const Rational hi = i + 1 == hist->counts.size() ? hist->hi : Rational(lo + width);
        data << i << ',' << lo.get_str() << ',' << hi.get_str() << ',' << hist->counts[i] << '\n';
      }
    }
  }
  std::size_t defined = 0;
  for (const auto& r : ratios) defined += r.value.has_value();
  emit(o, data.str(),
       std::to_string(ratios.size()) + " ratios (" + std::to_string(defined) + " defined) for " + seq.name(), out);
  return kOk;
}

CheckReport index_identity_suite(std::size_t n_max, std::size_t cases, unsigned seed) {
  CheckReport report("double-sum reindexing, random tables");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = 1 + c % n_max;
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
    for (auto& row : a) {
      for (auto& v : row) v = make_rational(num(rng), den(rng));
    }
    const IndexTable table = [&a](std::size_t k, std::size_t i) -> Rational {
      return k < a.size() && i < a[k].size() ? a[k][i] : Rational(0);
    };
    for (std::size_t j = 0; j <= n / 2; ++j) {
      const auto r = check_index_identity(n, j, table);
      if (!r.passed) report.fail(*r.failure);
      ++report.cases;
    }
  }
  return report;
}

CheckReport closed_form_vs_substitution(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k_max,
                                        Execution exec) {
  CheckReport report("closed form vs forward substitution (" + seq.name() + ", alpha=" + alpha.value().get_str() +
                     ")");
  const auto closed = build_operator(alpha, seq, k_max, 0, exec);
  const auto solved = solve_operator_from_action(alpha, seq, k_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (!(closed.Q[k] == solved.Q[k])) report.fail("k=" + std::to_string(k));
    ++report.cases;
  }
  return report;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const HermiteParam alpha = select_alpha(o, false);
  check_kmax(o);
  std::vector<GammaSeq> seqs;
  if (selector_count(o) == 0) {
    seqs = {sequences::const1(), sequences::linear(Rational(3)), sequences::example311(), sequences::bessel_j0()};
  } else {
    seqs.push_back(select_sequence(o));
  }
  const Execution exec = execution(o);
  std::vector<CheckReport> reports;
  for (const auto& seq : seqs) {
    reports.push_back(check_gslem(seq, o.kmax));
    reports.push_back(check_shifty(seq, o.kmax, 8));
    reports.push_back(closed_form_vs_substitution(alpha, seq, o.kmax, exec));
    reports.push_back(verify_diagonal_action(alpha, seq, o.kmax, exec));
    reports.push_back(alpha_zero_limit_check(seq, std::min<std::size_t>(o.kmax, 8)));
  }
  reports.push_back(index_identity_suite(9, 100, 20240229u));
  reports.push_back(check_hermite_identities(o.kmax, alpha));
  for (const Rational& la : {Rational(0), make_rational(1, 2), Rational(1), Rational(2)}) {
    for (const Rational& a : {Rational(-1), Rational(0), Rational(1), Rational(la + 1), Rational(la + 2)}) {
      reports.push_back(verify_laguerre_eigen(LaguerreParam(la, a), o.kmax));
    }
  }

  bool all = true;
  std::ostringstream data;
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : reports) {
      json item = {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
      if (r.failure) item["failure"] = *r.failure;
      list.push_back(item);
      all = all && r.passed;
    }
    data << list.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      data << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
      if (r.failure) data << ": " << *r.failure;
      data << '\n';
      all = all && r.passed;
    }
  }
  emit(o, data.str(), std::string("verify ") + (all ? "PASS" : "FAIL"), out);
  return all ? kOk : kCheckFailed;
}

int cmd_examples(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.example_id == "all") {
    ids = example_ids();
  } else {
    ids.push_back(o.example_id);
  }
  bool all = true;
  std::ostringstream data;
  json list = json::array();
  for (const auto& id : ids) {
    const ExampleReport report = run_example(id, execution(o));
    all = all && report.passed();
    if (o.format == "json") {
      list.push_back(to_json(report));
    } else {
      print_text(data, report);
    }
  }
  if (o.format == "json") data << list.dump(2) << '\n';
  emit(o, data.str(), std::string("examples ") + (all ? "PASS" : "FAIL"), out);
  return all ? kOk : kCheckFailed;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

void add_sequence_options(CLI::App* sub, Options& o) {
  std::string names;
  for (const auto& n : sequences::registry_names()) names += (names.empty() ? "" : ", ") + n;
  sub->add_option("--seq", o.seq_name, "Named sequence: " + names);
  sub->add_option("--factored", o.factored, "L-P+ parameters, e.g. \"sigma=1/2;zeros=1,1;c=1;m=0\"");
  sub->add_option("--seq-file", o.seq_file, "JSON file {\"gammas\": [\"p/q\", ...], \"tail\": \"p/q\"}");
}

void add_common_options(CLI::App* sub, Options& o, const std::vector<std::string>& formats) {
  sub->add_option("--alpha", o.alpha, "Hermite parameter, p/q")->capture_default_str();
  sub->add_option("--kmax", o.kmax, "Largest index k")->capture_default_str();
  sub->add_option("--p", o.p, "Shift p in g_{k,p}*")->capture_default_str();
  sub->add_option("--out", o.out_path, "Write data here instead of stdout");
  o.format = formats.front();
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  sub->add_flag("--serial", o.serial, "Use the serial reference kernels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-diagonal differential operators: exact coefficient polynomials and multiplier-sequence "
               "checks",
               "hermdiag"};
  app.require_subcommand(1);
  Options o;

  auto* qpoly = app.add_subcommand("qpoly", "Coefficient polynomials Q_{k,p}, k <= kmax");
  add_sequence_options(qpoly, o);
  add_common_options(qpoly, o, {"csv", "json"});

  auto* reality = app.add_subcommand("reality", "Real-rootedness of each Q_{k,p} (alpha > 0)");
  add_sequence_options(reality, o);
  add_common_options(reality, o, {"csv", "json"});

  auto* ratios = app.add_subcommand("ratios", "Ratios g_{k,p}*(-1) / g_{k-1,p}*(-1), k = 1..kmax");
  add_sequence_options(ratios, o);
  add_common_options(ratios, o, {"csv", "json"});
  ratios->add_option("--histogram", o.histogram, "Equal-width bin counts over the defined ratios")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Exact identity suites (default: four built-in sequences)");
  add_sequence_options(verify, o);
  add_common_options(verify, o, {"text", "json"});

  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");
  std::vector<std::string> ids = example_ids();
  ids.insert(ids.begin(), "all");
  examples->add_option("--id", o.example_id, "Example to run")->check(CLI::IsMember(ids))->capture_default_str();
  add_common_options(examples, o, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kError;
  }

  try {
    if (*qpoly) return cmd_qpoly(o, out);
    if (*reality) return cmd_reality(o, out);
    if (*ratios) return cmd_ratios(o, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_examples(o, out);
  } catch (const ConfigError& e) {
    write_error(err, "invalid_config", e.what());
  } catch (const std::exception& e) {
    write_error(err, "runtime", e.what());
  }
  return kError;
}

}  // namespace hermdiag::cli
