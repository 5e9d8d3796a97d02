// Command-line front end: runs verification suites and single checks,
// emits deterministic JSON or markdown reports.
//
// Exit codes: 0 certified, 1 at least one check failed, 2 usage or
// configuration error, 3 internal arithmetic inconsistency.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "freeact/closure.hpp"
#include "freeact/fixpt.hpp"
#include "freeact/reps.hpp"
#include "freeact/suites.hpp"
#include "freeact/theta.hpp"

using namespace freeact;

namespace {

struct CliOptions {
  Config config;
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::string epsilon_text;
  std::string primes_text;
  // Option handles, used to let explicit flags win over the config file.
  std::map<std::string, CLI::Option*> opts;
  bool passed(const std::string& name) const {
    auto it = opts.find(name);
    return it != opts.end() && it->second->count() > 0;
  }
};

void load_config_file(Config& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.contains("epsilon")) config.epsilon = parse_rational(j["epsilon"].get<std::string>());
  if (j.contains("k_min")) config.k_min = j["k_min"].get<int>();
  if (j.contains("k_max")) config.k_max = j["k_max"].get<int>();
  if (j.contains("primes")) config.primes = j["primes"].get<std::vector<long>>();
  if (j.contains("seed")) config.seed = j["seed"].get<uint64_t>();
  if (j.contains("samples")) {
    const auto& s = j["samples"];
    if (s.contains("disjointness")) config.samples.disjointness = s["disjointness"].get<int>();
    if (s.contains("invariance")) config.samples.invariance = s["invariance"].get<int>();
    if (s.contains("gluing_numeric")) config.samples.gluing_numeric = s["gluing_numeric"].get<int>();
  }
}

std::vector<long> parse_primes(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stol(tok));
  }
  if (out.empty()) throw PreconditionError("empty prime list");
  return out;
}

// Flags win over the config file: file values apply only where the
// corresponding flag was not passed.
void finalize_config(CliOptions& opt) {
  if (!opt.config_path.empty()) {
    Config from_file;
    load_config_file(from_file, opt.config_path);
    if (!opt.passed("--epsilon")) opt.config.epsilon = from_file.epsilon;
    if (!opt.passed("--k-min")) opt.config.k_min = from_file.k_min;
    if (!opt.passed("--k-max")) opt.config.k_max = from_file.k_max;
    if (!opt.passed("--primes")) opt.config.primes = from_file.primes;
    if (!opt.passed("--seed")) opt.config.seed = from_file.seed;
    if (!opt.passed("--samples-disjointness"))
      opt.config.samples.disjointness = from_file.samples.disjointness;
    if (!opt.passed("--samples-invariance"))
      opt.config.samples.invariance = from_file.samples.invariance;
    if (!opt.passed("--samples-gluing"))
      opt.config.samples.gluing_numeric = from_file.samples.gluing_numeric;
  }
  if (!opt.epsilon_text.empty()) opt.config.epsilon = parse_rational(opt.epsilon_text);
  if (!opt.primes_text.empty()) opt.config.primes = parse_primes(opt.primes_text);
  opt.config.validate();
}

int cmd_verify(const std::string& suite, CliOptions& opt) {
  finalize_config(opt);
  Report report = run_suite(suite, opt.config);
  emit_report(report, opt.format, opt.out_path);
  size_t failed = report.failed_count();
  std::cerr << "suite " << suite << ": " << report.checks.size() << " checks, " << failed
            << " failed -> " << (report.certified() ? "certified" : "FAILED") << "\n";
  return report.certified() ? 0 : 1;
}

int cmd_group_info(const std::string& family, int param, int eps_sign) {
  if (family == "P") {
    PkFamily fam(param);
    std::cout << "P(" << param << "): order " << fam.order() << "\n";
    std::cout << "relations: "
              << (verify_relations(fam, fam.generators(), fam.relations()).ok() ? "hold" : "VIOLATED")
              << "\n";
    std::cout << "rank at p=3: " << elementary_abelian_rank(CayleyTable::from_family(fam), 3) << "\n";
  } else if (family == "E") {
    EpFamily fam(param);
    std::cout << "E(" << param << "): order " << fam.order() << "\n";
    std::cout << "relations: "
              << (verify_relations(fam, fam.generators(), fam.relations()).ok() ? "hold" : "VIOLATED")
              << "\n";
    std::cout << "rank at p=" << param << ": "
              << elementary_abelian_rank(CayleyTable::from_family(fam), static_cast<unsigned>(param))
              << "\n";
  } else if (family == "B") {
    BkFamily fam(param, eps_sign);
    std::cout << "B(" << param << "," << eps_sign << "): order " << fam.order() << "\n";
    std::cout << "relations: "
              << (verify_relations(fam, fam.generators(), fam.relations()).ok() ? "hold" : "VIOLATED")
              << "\n";
    std::cout << "rank at p=3: " << elementary_abelian_rank(CayleyTable::from_family(fam), 3) << "\n";
  } else {
    throw PreconditionError("unknown family: " + family + " (use P, E or B)");
  }
  return 0;
}

int cmd_rep_check(const std::string& name, long p) {
  RepTable table = rep_build(parse_rep_name(name), p);
  std::cout << "table " << rep_name_string(table.name);
  if (table.name == RepName::RhoEp) std::cout << " (p = " << table.param << ")";
  std::cout << "\n";
  bool unitary = rep_all_unitary(table);
  std::cout << "unitary generator images: " << (unitary ? "yes" : "NO") << "\n";
  MatrixOps ops{table.dim};
  auto report = verify_relations(ops, rep_relation_images(table), rep_source_relations(table));
  std::cout << "source relations: " << (report.ok() ? "hold" : report.to_string()) << "\n";
  return (unitary && report.ok()) ? 0 : 1;
}

int cmd_fixedpoints(const std::string& space_name, const std::string& group_name) {
  Space space;
  if (space_name == "X0") space = Space::X0;
  else if (space_name == "X1") space = Space::X1;
  else if (space_name == "X2") space = Space::X2;
  else if (space_name == "Y") space = Space::Y;
  else throw PreconditionError("space must be Y, X0, X1 or X2");
  if (group_name.size() < 2 || group_name[0] != 'P')
    throw PreconditionError("group must be P<k>, e.g. P3");
  int k = std::stoi(group_name.substr(1));
  Census census = product_census(k, space);
  PkFamily fam(k);
  std::cout << "census of " << group_name << " on " << space_name << ": "
            << census.entries.size() << " offenders\n";
  for (const auto& e : census.entries) {
    std::cout << "  " << fam.word_string(e.word) << "  fixed-space dim " << e.basis.size();
    if (space == Space::X0 && (in_a1(e.word) || in_a2(e.word)))
      std::cout << (in_a1(e.word) ? "  [A1]" : "  [A2]");
    std::cout << "\n";
  }
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& format, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw PreconditionError("cannot read report: " + in_path);
  std::stringstream ss;
  ss << in.rdbuf();
  Report report = report_from_json(ss.str());
  emit_report(report, format, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freeact: exact certification of free group actions on S^5 x S^5"};
  app.require_subcommand(1);

  CliOptions opt;

  auto add_config_flags = [&](CLI::App* cmd) {
    opt.opts["--epsilon"] =
        cmd->add_option("--epsilon", opt.epsilon_text, "tube width as a rational p/q in (0, 1/9)");
    opt.opts["--k-min"] = cmd->add_option("--k-min", opt.config.k_min, "smallest P(k) to check");
    opt.opts["--k-max"] = cmd->add_option("--k-max", opt.config.k_max, "largest P(k) to check");
    opt.opts["--primes"] =
        cmd->add_option("--primes", opt.primes_text, "comma-separated odd primes for E(p)");
    opt.opts["--seed"] = cmd->add_option("--seed", opt.config.seed, "sampling seed");
    opt.opts["--samples-disjointness"] =
        cmd->add_option("--samples-disjointness", opt.config.samples.disjointness);
    opt.opts["--samples-invariance"] =
        cmd->add_option("--samples-invariance", opt.config.samples.invariance);
    opt.opts["--samples-gluing"] =
        cmd->add_option("--samples-gluing", opt.config.samples.gluing_numeric);
    cmd->add_option("--config", opt.config_path, "JSON config file (flags win)");
    cmd->add_option("--out", opt.out_path, "report output path (default stdout)");
    cmd->add_option("--format", opt.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_flag("--timings", opt.config.timings, "include per-check nanosecond timings");
  };

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_config_flags(verify);

  auto* group = app.add_subcommand("group", "group utilities");
  auto* group_info = group->add_subcommand("info", "order, relations and rank of a family member");
  std::string family;
  int family_param = 3, eps_sign = -1;
  group_info->add_option("family", family, "P, E or B")->required();
  group_info->add_option("param", family_param, "k for P/B, p for E")->required();
  group_info->add_option("--eps-sign", eps_sign, "+1 or -1 for B(k,eps)");

  auto* rep = app.add_subcommand("rep", "representation utilities");
  auto* rep_check_cmd = rep->add_subcommand("check", "verify one representation table");
  std::string rep_name;
  long rep_p = 5;
  rep_check_cmd->add_option("name", rep_name, "phi, psi0..2, rho_p3, rho_ep, rho_b4, rho_e2")
      ->required();
  rep_check_cmd->add_option("--p", rep_p, "prime for rho_ep");

  auto* fix = app.add_subcommand("fixedpoints", "list the fixed-point census");
  std::string space_name = "X0", group_name = "P3";
  fix->add_option("--space", space_name, "Y, X0, X1 or X2");
  fix->add_option("--group", group_name, "P<k>");

  auto* rep_cmd = app.add_subcommand("report", "re-render a JSON report");
  std::string in_path;
  rep_cmd->add_option("--in", in_path, "input JSON report")->required();
  rep_cmd->add_option("--format", opt.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  rep_cmd->add_option("--out", opt.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(suite, opt);
    if (group_info->parsed()) return cmd_group_info(family, family_param, eps_sign);
    if (rep_check_cmd->parsed()) return cmd_rep_check(rep_name, rep_p);
    if (fix->parsed()) return cmd_fixedpoints(space_name, group_name);
    if (rep_cmd->parsed()) return cmd_report(in_path, opt.format, opt.out_path);
    std::cerr << app.help();
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
