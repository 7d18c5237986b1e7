#include "qdl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qdl/cyclotomic.hpp"
#include "qdl/paths.hpp"
#include "qdl/qcore.hpp"
#include "qdl/qdelannoy.hpp"

namespace qdl {

Json poly_to_json(const IntPoly &p) {
  Json arr = Json::array();
  for (auto &s : p.to_decimal_strings())
    arr.push_back(std::move(s));
  return arr;
}

IntPoly poly_from_json(const Json &j) {
  if (!j.is_array())
    throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<std::string> coeffs;
  for (const auto &c : j) {
    if (!c.is_string())
      throw std::invalid_argument("polynomial coefficients must be decimal strings");
    coeffs.push_back(c.get<std::string>());
  }
  return IntPoly::from_decimal_strings(coeffs);
}

Json report_to_json(const CongruenceReport &r) {
  Json params = Json::object();
  for (const auto &[name, value] : r.params)
    params[name] = value;
  return Json{{"statement", statement_tag(r.statement)},
              {"params", std::move(params)},
              {"lhs", poly_to_json(r.lhs)},
              {"rhs", poly_to_json(r.rhs)},
              {"residue", poly_to_json(r.residue)},
              {"pass", r.pass}};
}

Json summary_to_json(const SweepSummary &s, const SweepConfig &cfg) {
  Json failures = Json::array();
  for (const auto &r : s.failures)
    failures.push_back(report_to_json(r));
  Json out{{"kind", sweep_kind_name(s.kind)},
           {"ranges",
            {{"max_n", cfg.max_n}, {"max_h", cfg.max_h}, {"max_k", cfg.max_k}, {"max_a", cfg.max_a}, {"max_c", cfg.max_c}}},
           {"cases", s.cases},
           {"passed", s.passed},
           {"failed", s.failures.size()},
           {"failures", std::move(failures)}};
  if (s.kind == SweepKind::Thm1) {
    Json bad = Json::array();
    for (const auto &params : s.induction_failures) {
      Json p = Json::object();
      for (const auto &[name, value] : params)
        p[name] = value;
      bad.push_back(std::move(p));
    }
    out["induction"] = Json{{"cases", s.induction_cases}, {"failures", std::move(bad)}};
  }
  out["ok"] = s.ok();
  return out;
}

namespace {

constexpr PathClass kClasses[] = {PathClass::Q1, PathClass::Q2, PathClass::Q3, PathClass::Q4};

std::string params_text(const std::vector<std::pair<std::string, long>> &params) {
  std::ostringstream os;
  for (std::size_t i = 0; i < params.size(); ++i)
    os << (i ? " " : "") << params[i].first << '=' << params[i].second;
  return os.str();
}

} // namespace

Json audit_to_json(const AuditReport &r) {
  Json counts = Json::object();
  Json sizes = Json::object();
  for (PathClass c : kClasses) {
    counts[std::string(class_name(c))] = r.class_counts[class_index(c)];
    if (c == PathClass::Q3)
      continue;
    Json hist = Json::object();
    for (const auto &[size, num] : r.orbit_sizes[class_index(c)])
      hist[std::to_string(size)] = num;
    sizes[std::string(class_name(c))] = std::move(hist);
  }
  Json sums{{"S1", poly_to_json(r.sums.s1)},
            {"S2", poly_to_json(r.sums.s2)},
            {"S3", poly_to_json(r.sums.s3)},
            {"S4", poly_to_json(r.sums.s4)}};
  Json residues{{"total", poly_to_json(r.total_residue)},
                {"theorem_rhs", poly_to_json(r.rhs_residue)},
                {"fixed_points", poly_to_json(r.fixed_total_residue)},
                {"S1", poly_to_json(r.sum_residues[0])},
                {"S2", poly_to_json(r.sum_residues[1])},
                {"S3", poly_to_json(r.sum_residues[2])},
                {"S4", poly_to_json(r.sum_residues[3])}};
  return Json{{"frame", {{"h", r.frame.h}, {"k", r.frame.k}, {"n", r.frame.n}}},
              {"total_paths", r.total_paths},
              {"class_counts", std::move(counts)},
              {"orbit_sizes", std::move(sizes)},
              {"sums", std::move(sums)},
              {"residues", std::move(residues)},
              {"literal_mismatches", r.literal_mismatches},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

std::string summary_to_text(const SweepSummary &s) {
  std::ostringstream os;
  os << sweep_kind_name(s.kind) << ": " << s.cases << " cases, " << s.passed << " passed, " << s.failures.size()
     << " failed\n";
  for (const auto &r : s.failures)
    os << "FAIL " << statement_tag(r.statement) << ' ' << params_text(r.params) << ": residue "
       << r.residue.to_string() << '\n';
  if (s.kind == SweepKind::Thm1) {
    os << "induction: " << s.induction_cases << " cases, " << s.induction_failures.size() << " failed\n";
    for (const auto &p : s.induction_failures)
      os << "FAIL induction " << params_text(p) << '\n';
  }
  return os.str();
}

std::string audit_to_text(const AuditReport &r) {
  std::ostringstream os;
  os << "frame h=" << r.frame.h << " k=" << r.frame.k << " n=" << r.frame.n << ": " << r.total_paths << " paths\n";
  for (PathClass c : kClasses) {
    os << "  " << class_name(c) << ": " << r.class_counts[class_index(c)] << " paths";
    if (c != PathClass::Q3) {
      os << ", orbits";
      for (const auto &[size, num] : r.orbit_sizes[class_index(c)])
        os << ' ' << num << "x" << size;
    }
    os << '\n';
  }
  os << "  S1 = " << r.sums.s1.to_string() << '\n'
     << "  S2 = " << r.sums.s2.to_string() << '\n'
     << "  S3 = " << r.sums.s3.to_string() << '\n'
     << "  S4 = " << r.sums.s4.to_string() << '\n'
     << "  total mod Phi_n = " << r.total_residue.to_string() << '\n'
     << "  rhs mod Phi_n   = " << r.rhs_residue.to_string() << '\n'
     << "  literal-reading mismatches: " << r.literal_mismatches << '\n';
  for (const auto &v : r.violations)
    os << "  VIOLATION " << v << '\n';
  os << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

struct RunConfig {
  std::string target;
  std::optional<long> h, k, n;
  long max_n = 8, max_h = 8, max_k = 8, max_a = 2;
  std::optional<long> max_c;
  std::string route = "rec";
  bool json = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

long require(const std::optional<long> &v, const char *flag) {
  if (!v)
    throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

void add_output_flags(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_flag("--json", cfg.json, "Emit JSON instead of text");
  cmd->add_option("--out", cfg.out_path, "Write the report to this file");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

struct Outcome {
  std::string text;
  int code = exit_code::ok;
};

Outcome run_compute(const RunConfig &cfg) {
  Json j{{"kind", cfg.target}};
  std::string text;
  if (cfg.target == "delannoy") {
    long h = require(cfg.h, "--h"), k = require(cfg.k, "--k");
    BigInt v = delannoy(h, k);
    j["h"] = h;
    j["k"] = k;
    j["value"] = v.get_str();
    text = v.get_str();
  } else if (cfg.target == "cyclotomic") {
    long n = require(cfg.n, "--n");
    if (n < 1)
      throw UsageError("--n must be positive");
    IntPoly p = cyclotomic(static_cast<unsigned>(n));
    j["n"] = n;
    j["poly"] = poly_to_json(p);
    text = p.to_string();
  } else {
    long h = require(cfg.h, "--h"), k = require(cfg.k, "--k");
    IntPoly p;
    j["h"] = h;
    j["k"] = k;
    if (cfg.target == "qdelannoy") {
      auto route = parse_route(cfg.route);
      if (!route)
        throw UsageError("unknown route '" + cfg.route + "' (expected def, alt or rec)");
      p = q_delannoy(h, k, *route);
      j["route"] = route_name(*route);
    } else if (cfg.target == "qbinom") {
      p = q_binomial(h, k);
    } else {
      p = sigma_poly(h, k);
    }
    j["poly"] = poly_to_json(p);
    text = p.to_string();
  }
  return {cfg.json ? j.dump(2) + "\n" : text + "\n", exit_code::ok};
}

Outcome run_verify(const RunConfig &cfg) {
  SweepConfig sc;
  sc.kind = *parse_sweep_kind(cfg.target);
  sc.max_n = cfg.max_n;
  sc.max_h = cfg.max_h;
  sc.max_k = cfg.max_k;
  sc.max_a = cfg.max_a;
  sc.max_c = cfg.max_c.value_or(cfg.max_a);
  sc.jobs = cfg.jobs;
  SweepSummary s = sweep(sc);
  std::string text = cfg.json ? summary_to_json(s, sc).dump(2) + "\n" : summary_to_text(s);
  return {std::move(text), s.ok() ? exit_code::ok : exit_code::failed};
}

Outcome run_audit(const RunConfig &cfg) {
  CornerFrame f = CornerFrame::make(require(cfg.h, "--h"), require(cfg.k, "--k"), require(cfg.n, "--n"));
  AuditReport r = audit(f);
  std::string text = cfg.json ? audit_to_json(r).dump(2) + "\n" : audit_to_text(r);
  return {std::move(text), r.ok() ? exit_code::ok : exit_code::failed};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Exact q-Delannoy numbers, Lucas-type congruences and orbit audits", "qdelannoy"};
  // --h is a frame coordinate, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto *compute = app.add_subcommand("compute", "Compute a single value");
  compute->set_help_flag("--help", "Print this help message and exit");
  compute->add_option("what", cfg.target, "delannoy | qdelannoy | qbinom | cyclotomic | sigma-poly")
      ->required()
      ->check(CLI::IsMember({"delannoy", "qdelannoy", "qbinom", "cyclotomic", "sigma-poly"}));
  compute->add_option("--h", cfg.h)->check(CLI::NonNegativeNumber);
  compute->add_option("--k", cfg.k);
  compute->add_option("--n", cfg.n)->check(CLI::PositiveNumber);
  compute->add_option("--route", cfg.route, "def | alt | rec");
  add_output_flags(compute, cfg);

  auto *verify = app.add_subcommand("verify", "Sweep a congruence over a parameter grid");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("what", cfg.target, "lucas | dlucas | qlucas | thm1 | thm2 | interp")
      ->required()
      ->check(CLI::IsMember({"lucas", "dlucas", "qlucas", "thm1", "thm2", "interp"}));
  verify->add_option("--max-n", cfg.max_n, "Largest n (or prime p)")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-h", cfg.max_h)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-k", cfg.max_k)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-a", cfg.max_a)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-c", cfg.max_c, "Defaults to --max-a")->check(CLI::NonNegativeNumber);
  add_output_flags(verify, cfg);

  auto *orbits = app.add_subcommand("orbits", "Orbit machinery around a corner");
  orbits->set_help_flag("--help", "Print this help message and exit");
  orbits->require_subcommand(1);
  auto *audit_cmd = orbits->add_subcommand("audit", "Exhaustively audit one frame");
  audit_cmd->set_help_flag("--help", "Print this help message and exit");
  audit_cmd->add_option("--h", cfg.h)->required()->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--k", cfg.k)->required()->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  add_output_flags(audit_cmd, cfg);

  std::vector<std::string> storage{"qdelannoy"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : storage)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_code::usage;
  }

  Outcome result;
  try {
    if (compute->parsed())
      result = run_compute(cfg);
    else if (verify->parsed())
      result = run_verify(cfg);
    else
      result = run_audit(cfg);
  } catch (const UsageError &e) {
    const CLI::App *cmd = compute->parsed() ? compute : verify->parsed() ? verify : audit_cmd;
    err << "error: " << e.what() << "\n\n" << cmd->help();
    return exit_code::usage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return exit_code::usage;
    }
    file << result.text;
  }
  return result.code;
}

} // namespace qdl
