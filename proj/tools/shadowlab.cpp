// Command-line front end: exact shadow computations, named checks, certified
// chain construction, and counterexample hunts over small search spaces.
//
// Exit codes: 0 the claim holds / success; 1 the claim fails or the hunt
// found violations; 2 usage, parse, or domain errors; 3 node budget
// exhausted; 4 internal consistency failure (always a bug).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadowlab/chain.hpp"
#include "shadowlab/family.hpp"
#include "shadowlab/hunt.hpp"
#include "shadowlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace shadowlab;

constexpr const char* kTool = "shadowlab";
constexpr const char* kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ReportBuilder {
  json inputs = json::array();
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  Family load_family(const std::string& path) {
    std::string bytes = slurp(path);
    inputs.push_back({{"path", path}, {"fnv1a64", fnv1a64_hex(bytes)}});
    try {
      return parse_fam_string(bytes);
    } catch (const ParseError& e) {
      throw Error(path + ":" + e.what());
    }
  }

  json load_json(const std::string& path) {
    std::string bytes = slurp(path);
    inputs.push_back({{"path", path}, {"fnv1a64", fnv1a64_hex(bytes)}});
    try {
      return json::parse(bytes);
    } catch (const json::exception& e) {
      throw Error(path + ": " + e.what());
    }
  }

  json envelope(const std::vector<std::string>& command, json result) const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kTool;
    j["version"] = kVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = std::move(result);
    j["timing_ms"] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return j;
  }
};

// argv without the --jobs flag: reports must not depend on worker count.
std::vector<std::string> scrub_command(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--jobs") {
      ++i;  // swallow the value
      continue;
    }
    if (a.rfind("--jobs=", 0) == 0) continue;
    out.push_back(std::move(a));
  }
  return out;
}

std::string verdict_text(const Verdict& v) {
  std::string out = v.claim + ": " + (v.holds ? "HOLDS" : "FAILS") + "\n";
  for (auto it = v.stats.begin(); it != v.stats.end(); ++it)
    out += "  " + it.key() + ": " + it.value().dump() + "\n";
  if (!v.witness.is_null()) out += "  witness: " + v.witness.dump() + "\n";
  return out;
}

std::string certificate_text(const ChainCertificate& cert) {
  std::string out;
  out += "outcome: ";
  out += cert.outcome == ChainOutcome::f_chain ? "F_CHAIN" : "G_CERTIFICATE";
  out += "\n";
  for (int i = 1; i <= cert.k; ++i) {
    out += "M_" + std::to_string(i) + " = " + braces(cert.chain[i - 1]) +
           "  (size " + std::to_string(cert.chain[i - 1].size()) +
           " >= bound " + std::to_string(cert.size_bound(i)) + ")\n";
  }
  if (cert.removals.empty()) {
    out += "removals: none\n";
  } else {
    for (const auto& r : cert.removals)
      out += "removal at level " + std::to_string(r.level) + ": " +
             braces(r.removed) + "  (restriction " + braces(r.violating_m) +
             " violates)\n";
  }
  std::size_t direct = 0;
  for (const auto& e : cert.f_evidence)
    if (e.via == "direct") ++direct;
  out += "evidence: " + std::to_string(cert.f_evidence.size()) +
         " link claims (" + std::to_string(direct) + " direct)";
  if (!cert.g_evidence.empty())
    out += " + " + std::to_string(cert.g_evidence.size()) +
           " second-family claims";
  out += "\n";
  return out;
}

void emit(const std::string& format, const json& report,
          const std::string& text) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SHADOWLAB_BUDGET")) {
    try {
      std::size_t used = 0;
      std::string s(env);
      unsigned long long v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw DomainError(std::string("SHADOWLAB_BUDGET is not a count: '") +
                        env + "'");
    }
  }
  return kDefaultNodeBudget;
}

struct CheckArgs {
  std::string claim;
  std::vector<std::string> files;
  int ell = 0;
  std::string cert_path;
  std::string format = "text";
  int jobs = 1;
};

int run_check(const CheckArgs& a, const std::vector<std::string>& command) {
  ReportBuilder rb;
  Verdict v;
  if (a.claim == "katona" || a.claim == "local" || a.claim == "kk-bound") {
    if (a.files.size() != 1)
      throw DomainError("claim '" + a.claim + "' takes exactly one family");
    Family f = rb.load_family(a.files[0]);
    v = a.claim == "katona"  ? check_katona(f)
        : a.claim == "local" ? check_local(f)
                             : check_kk_bound(f);
  } else if (a.claim == "frankl-cross") {
    if (a.files.size() != 2)
      throw DomainError("claim 'frankl-cross' takes two families");
    Family f = rb.load_family(a.files[0]);
    Family g = rb.load_family(a.files[1]);
    v = check_frankl_cross(f, g);
  } else if (a.claim == "union-antichain") {
    if (a.files.size() != 1)
      throw DomainError("claim 'union-antichain' takes exactly one family");
    if (a.ell < 1) throw DomainError("claim 'union-antichain' needs --ell");
    Family f = rb.load_family(a.files[0]);
    v = check_union_antichain_conjecture(f, a.ell);
  } else if (a.claim == "replay") {
    if (a.cert_path.empty()) throw DomainError("claim 'replay' needs --cert");
    ChainCertificate cert = certificate_from_json(rb.load_json(a.cert_path));
    if (cert.mode == ChainMode::cross) {
      if (a.files.size() != 2)
        throw DomainError("a cross certificate replays against two families");
      Family f = rb.load_family(a.files[0]);
      Family g = rb.load_family(a.files[1]);
      v = replay_certificate(cert, f, &g);
    } else {
      if (a.files.size() != 1)
        throw DomainError(
            "an intersecting certificate replays against one family");
      Family f = rb.load_family(a.files[0]);
      v = replay_certificate(cert, f);
    }
  } else {
    throw DomainError("unknown claim '" + a.claim + "'");
  }
  emit(a.format, rb.envelope(command, verdict_to_json(v)), verdict_text(v));
  return v.holds ? 0 : 1;
}

struct ChainArgs {
  std::vector<std::string> files;
  bool cross = false;
  bool audit = false;
  std::string cert_out;
  std::string format = "text";
  int jobs = 1;
};

int run_chain(const ChainArgs& a, const std::vector<std::string>& command) {
  ReportBuilder rb;
  ChainCertificate cert;
  if (a.cross) {
    if (a.files.size() != 2)
      throw DomainError("--cross takes two families");
    Family f = rb.load_family(a.files[0]);
    Family g = rb.load_family(a.files[1]);
    cert = build_chain_cross(f, g, a.audit);
  } else {
    if (a.files.size() != 1)
      throw DomainError("chain construction takes one family (or two with "
                        "--cross)");
    Family f = rb.load_family(a.files[0]);
    cert = build_chain_intersecting(f, a.audit);
  }
  json cert_json = certificate_to_json(cert);
  if (!a.cert_out.empty()) {
    std::ofstream out(a.cert_out);
    if (!out) throw Error("cannot write '" + a.cert_out + "'");
    out << cert_json.dump(2) << "\n";
  }
  json result;
  result["certificate"] = std::move(cert_json);
  emit(a.format, rb.envelope(command, std::move(result)),
       certificate_text(cert));
  return 0;
}

struct HuntArgs {
  int n = 0;
  int k = 0;
  int ell = 0;
  std::string mode = "exhaustive";
  std::string constraint;
  std::vector<std::string> claims;
  std::uint64_t samples = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool budget_set = false;
  int max_size = 0;
  std::string format = "text";
  int jobs = 1;
};

std::string hunt_text(const HuntReport& r) {
  std::string out;
  json sj = report_to_json(r);
  out += "space: " + sj["space"]["mode"].get<std::string>() + " " +
         sj["space"]["constraint"].get<std::string>() +
         " n=" + std::to_string(r.space.n);
  if (r.space.k > 0) out += " k=" + std::to_string(r.space.k);
  if (r.space.ell) out += " l=" + std::to_string(*r.space.ell);
  out += "\nclaims:";
  for (const auto& c : r.claims) out += " " + c;
  out += "\nfamilies examined: " + std::to_string(r.examined) + "\n";
  if (r.regimes)
    out += "regimes: guaranteed=" + std::to_string(r.regimes->guaranteed) +
           " conjectured=" + std::to_string(r.regimes->conjectured) +
           " neither=" + std::to_string(r.regimes->neither) + "\n";
  out += "violations: " + std::to_string(r.violations.size()) + "\n";
  for (const auto& v : r.violations) {
    out += "--- violation (" + v.verdict.claim + ")\n" + v.family;
    if (v.family2) out += "and:\n" + *v.family2;
    out += verdict_text(v.verdict);
  }
  if (r.budget_exhausted)
    out += "node budget exhausted; counts are a lower bound\n";
  return out;
}

int run_hunt(const HuntArgs& a, const std::vector<std::string>& command) {
  ReportBuilder rb;
  SearchSpace sp;
  sp.n = a.n;
  sp.k = a.k;
  if (a.ell > 0) sp.ell = a.ell;

  if (a.mode == "exhaustive")
    sp.mode = SearchSpace::Mode::exhaustive;
  else if (a.mode == "random")
    sp.mode = SearchSpace::Mode::random;
  else if (a.mode == "structured")
    sp.mode = SearchSpace::Mode::structured;
  else
    throw DomainError("unknown mode '" + a.mode + "'");

  std::string constraint = a.constraint;
  if (constraint.empty()) {
    // infer from the claims; default is the intersecting space
    bool cross = false, antichain = false;
    for (const auto& c : a.claims) {
      if (c == "frankl-cross") cross = true;
      if (c == "union-antichain") antichain = true;
    }
    if (cross && antichain)
      throw DomainError("claims span different search spaces");
    constraint = cross       ? "cross-intersecting"
                 : antichain ? "union-antichain"
                             : "intersecting";
  }
  if (constraint == "intersecting")
    sp.constraint = SearchSpace::Constraint::intersecting;
  else if (constraint == "cross-intersecting")
    sp.constraint = SearchSpace::Constraint::cross_intersecting;
  else if (constraint == "union-antichain")
    sp.constraint = SearchSpace::Constraint::union_antichain;
  else
    throw DomainError("unknown constraint '" + constraint + "'");

  sp.samples = a.samples;
  sp.seed = a.seed;
  if (a.max_size > 0) sp.max_family_size = a.max_size;
  sp.node_budget = a.budget_set ? a.budget : default_budget();

  HuntReport rep = sweep(sp, a.claims, a.jobs);
  emit(a.format, rb.envelope(command, report_to_json(rep)), hunt_text(rep));
  if (rep.budget_exhausted) return 3;
  return rep.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shadowlab: exact shadow checks, certified chain construction, and "
      "counterexample hunts for small set families"};
  app.require_subcommand(1);

  auto* shadow_cmd = app.add_subcommand(
      "shadow", "Compute the shadow of a family and print it in .fam form");
  std::string shadow_file;
  int shadow_jobs = 1;
  shadow_cmd->add_option("file", shadow_file, ".fam input")->required();
  shadow_cmd->add_option("--jobs", shadow_jobs, "worker threads (unused)");

  auto* check_cmd =
      app.add_subcommand("check", "Check a named claim against input files");
  CheckArgs ca;
  check_cmd
      ->add_option("claim", ca.claim,
                   "one of: katona, frankl-cross, local, union-antichain, "
                   "kk-bound, replay")
      ->required()
      ->check(CLI::IsMember({"katona", "frankl-cross", "local",
                             "union-antichain", "kk-bound", "replay"}));
  check_cmd->add_option("files", ca.files, ".fam inputs")->expected(1, 2);
  check_cmd->add_option("--ell", ca.ell, "l for union-antichain");
  check_cmd->add_option("--cert", ca.cert_path, "certificate JSON to replay");
  check_cmd->add_option("--format", ca.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--jobs", ca.jobs, "worker threads");

  auto* chain_cmd = app.add_subcommand(
      "chain", "Build a certified chain for an intersecting family (or a "
               "cross-intersecting pair with --cross)");
  ChainArgs ha;
  chain_cmd->add_option("files", ha.files, ".fam inputs")->expected(1, 2);
  chain_cmd->add_flag("--cross", ha.cross, "build for a pair (F, G)");
  chain_cmd->add_flag("--audit", ha.audit,
                      "re-verify every lemma conclusion by direct sweep");
  chain_cmd->add_option("--cert-out", ha.cert_out,
                        "also write the bare certificate JSON here");
  chain_cmd->add_option("--format", ha.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  chain_cmd->add_option("--jobs", ha.jobs, "worker threads");

  auto* hunt_cmd = app.add_subcommand(
      "hunt", "Sweep claims over a search space of families");
  HuntArgs ua;
  hunt_cmd->add_option("--n", ua.n, "ground set size")->required();
  hunt_cmd->add_option("--k", ua.k, "member size");
  hunt_cmd->add_option("--ell", ua.ell, "second size / antichain parameter");
  hunt_cmd->add_option("--mode", ua.mode, "exhaustive, random, structured")
      ->check(CLI::IsMember({"exhaustive", "random", "structured"}));
  hunt_cmd->add_option("--constraint", ua.constraint,
                       "intersecting, cross-intersecting, union-antichain "
                       "(default: inferred from claims)")
      ->check(CLI::IsMember(
          {"intersecting", "cross-intersecting", "union-antichain"}));
  hunt_cmd->add_option("--claims", ua.claims, "comma-separated claim list")
      ->delimiter(',');
  hunt_cmd->add_option("--samples", ua.samples, "random mode: sample count");
  hunt_cmd->add_option("--seed", ua.seed, "random mode: base seed");
  auto* budget_opt =
      hunt_cmd->add_option("--budget", ua.budget,
                           "node budget (default: SHADOWLAB_BUDGET or 1e8)");
  hunt_cmd->add_option("--max-size", ua.max_size, "cap family size");
  hunt_cmd->add_option("--format", ua.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  hunt_cmd->add_option("--jobs", ua.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  ua.budget_set = budget_opt->count() > 0;

  const std::vector<std::string> command = scrub_command(argc, argv);
  try {
    if (*shadow_cmd) {
      ReportBuilder rb;
      Family f = rb.load_family(shadow_file);
      std::cout << to_fam(shadow(f));
      return 0;
    }
    if (*check_cmd) return run_check(ca, command);
    if (*chain_cmd) return run_chain(ha, command);
    if (*hunt_cmd) return run_hunt(ua, command);
  } catch (const BudgetExceeded& e) {
    std::cerr << kTool << ": " << e.what() << "\n";
    return 3;
  } catch (const CertificationError& e) {
    std::cerr << kTool << ": internal error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << kTool << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << kTool << ": unexpected error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
