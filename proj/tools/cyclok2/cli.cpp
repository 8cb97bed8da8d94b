#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cyclok2/arith/number_theory.hpp"
#include "cyclok2/k2tame/nonclosure.hpp"
#include "json.hpp"
#include "suites.hpp"
#include "tables.hpp"

namespace cyclok2::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string s;
    while (std::getline(ss, s, ',')) {
      if (!s.empty()) out.push_back(s);
    }
  }
  return out;
}

Format parse_format(const std::string& s) {
  static const std::map<std::string, Format> m{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  return m.at(s);
}

int cmd_verify(const std::vector<std::string>& requested, const RunOptions& opt, Format fmt, bool timing,
               std::ostream& out) {
  std::vector<std::string> names = split_list(requested);
  if (names.empty()) names = suite_names();
  for (const auto& n : names) {
    if (!is_suite(n)) throw UsageError("unknown suite '" + n + "'");
  }
  std::vector<SuiteReport> reports;
  std::size_t failed = 0;
  for (const auto& n : names) {
    reports.push_back(run_suite(n, opt));
    failed += reports.back().failures();
  }
  render(out, reports, fmt, timing);
  return failed == 0 ? 0 : 1;
}

int cmd_table(TableRequest req, const std::string& l, const std::string& p, const std::string& n, Format fmt,
              std::ostream& out) {
  try {
    if (!l.empty()) req.l = parse_range(l);
    if (!p.empty()) req.p = parse_range(p);
    if (!n.empty()) req.n = parse_range(n);
    const Table t = make_table(req);
    render(out, t, fmt);
    return t.mismatches == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_text_or_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text << "\n";
}

int cmd_nonclosure(std::uint64_t n, std::uint64_t p, std::size_t count, const k2tame::SearchLimits& limits,
                   const std::string& path, std::ostream& out, std::ostream& err) {
  k2tame::NonClosureCertificate cert;
  try {
    cert = k2tame::nonclosure_sequence(n, p, count, limits);
  } catch (const k2tame::SearchExhausted& e) {
    err << "search exhausted after " << e.entries_found << " entries (last k = " << e.last_k << "): " << e.what()
        << "\n";
    return 1;
  } catch (const arith::FactoringEffortExceeded& e) {
    err << "factoring effort exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto j = nlohmann::json::parse(k2tame::to_json(cert));
  write_text_or_file(path, j.dump(2), out);
  if (!path.empty() && path != "-") {
    err << "wrote " << cert.entries.size() << " entries to " << path << "\n";
  }
  return 0;
}

int cmd_recheck(const std::string& path, Format fmt, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const auto rep = k2tame::recheck_nonclosure(ss.str());
  SuiteReport r;
  r.suite = "recheck";
  for (const auto& c : rep.checks) r.pass_if(c.ok, c.name, "certificate invariant", c.detail);
  render(out, {r}, fmt, false);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for cyclotomic elements in K2", "cyclok2"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  RunOptions opt;
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* verify = app.add_subcommand("verify", "run check suites");
  std::vector<std::string> suites;
  bool timing = false;
  verify->add_option("--suites", suites, "comma-separated suite names (default: all)");
  verify->add_flag("--timing", timing, "include wall time in json/csv output");

  auto* table = app.add_subcommand("table", "emit a parameter sweep");
  TableRequest treq;
  std::string lr, pr, nr;
  table->add_option("kind", treq.kind, "zset, counts or genus")->required();
  table->add_option("--l", lr, "range for l, e.g. 5..23");
  table->add_option("--p", pr, "range for p");
  table->add_option("--n", nr, "range for n");

  auto* nonclosure = app.add_subcommand("nonclosure", "generate a non-closure certificate");
  std::uint64_t nn = 0, np = 0;
  std::size_t ncount = 1;
  std::string nout;
  k2tame::SearchLimits limits = k2tame::SearchLimits::from_env();
  nonclosure->add_option("--n", nn, "level n")->required();
  nonclosure->add_option("--p", np, "prime p with p^2 | n")->required();
  nonclosure->add_option("--count", ncount, "number of entries")->capture_default_str();
  nonclosure->add_option("--out", nout, "certificate file (default stdout)");
  nonclosure->add_option("--max-k", limits.max_k, "multiplier search cap")->capture_default_str();
  nonclosure->add_option("--max-digits", limits.max_digits, "cap on digits of M_i")->capture_default_str();
  nonclosure->add_option("--trial-limit", limits.factor.trial_limit, "largest candidate prime")
      ->capture_default_str();
  nonclosure->add_option("--rho-limit", limits.factor.rho_iterations, "Pollard rho iterations")
      ->capture_default_str();

  auto* recheck = app.add_subcommand("recheck", "re-verify a certificate");
  std::string rfile;
  recheck->add_option("file", rfile, "certificate JSON")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      const Format fmt = parse_format(format.empty() ? "text" : format);
      return cmd_verify(suites, opt, fmt, timing, out);
    }
    if (table->parsed()) {
      treq.jobs = opt.jobs;
      const Format fmt = parse_format(format.empty() ? "csv" : format);
      return cmd_table(treq, lr, pr, nr, fmt, out);
    }
    if (nonclosure->parsed()) return cmd_nonclosure(nn, np, ncount, limits, nout, out, err);
    if (recheck->parsed()) return cmd_recheck(rfile, parse_format(format.empty() ? "text" : format), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cyclok2::cli
