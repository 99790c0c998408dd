// revmul: enumerate, verify, classify, and mine base-n reverse multiples,
// the numbers X with k*X = reverse(X) for an integer 1 < k < n.
//
// Exit codes: 0 success/clean, 1 usage or input error, 2 findings present,
// 3 not a solution, 4 anomaly (a proved fact failed, i.e. an engine bug).

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "revmul/analysis.hpp"
#include "revmul/campaign.hpp"
#include "revmul/digits.hpp"
#include "revmul/enumerate.hpp"
#include "revmul/families.hpp"
#include "revmul/version.hpp"

namespace {

using revmul::DigitString;
using revmul::Solution;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFindings = 2;
constexpr int kExitNotASolution = 3;
constexpr int kExitAnomaly = 4;

std::vector<int> parse_digit_list(const std::string& text) {
  std::vector<int> digits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad digit '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad digit '" + item + "'");
    digits.push_back(d);
  }
  if (digits.empty()) throw std::invalid_argument("empty digit list");
  return digits;
}

std::string join_digits(const std::vector<int>& digits, char sep = ',') {
  std::ostringstream os;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) os << sep;
    os << digits[i];
  }
  return os.str();
}

ordered_json solution_json(const Solution& s, std::optional<int> f = std::nullopt) {
  ordered_json j;
  j["base"] = s.base();
  j["k"] = s.k;
  j["digits"] = s.digits.digits();
  j["value"] = revmul::to_string(s.value());
  j["reversal"] = revmul::to_string(s.reversal());
  if (f) j["f"] = *f;
  j["p_prime"] = revmul::is_prime(s.base() + 1);
  return j;
}

void print_solution_table(const std::vector<Solution>& sols) {
  std::cout << "k\tdigits\tvalue\treversal\n";
  for (const Solution& s : sols) {
    std::cout << s.k << '\t' << join_digits(s.digits.digits()) << '\t'
              << revmul::to_string(s.value()) << '\t' << revmul::to_string(s.reversal()) << '\n';
  }
}

int cmd_verify(int base, const std::string& digit_text, std::optional<int> expect_k,
               const std::string& format) {
  const DigitString d(base, parse_digit_list(digit_text));
  const auto k = revmul::check_solution(d);
  const bool ok = k.has_value() && (!expect_k || *expect_k == *k);
  if (format == "json") {
    ordered_json j;
    j["base"] = base;
    j["digits"] = d.digits();
    j["value"] = revmul::to_string(revmul::value_of(d));
    j["reversal"] = revmul::to_string(revmul::value_of(revmul::reverse(d)));
    if (k) j["k"] = *k;
    j["solution"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "digits   " << join_digits(d.digits()) << " (base " << base << ")\n";
    std::cout << "value    " << revmul::to_string(revmul::value_of(d)) << '\n';
    std::cout << "reversal " << revmul::to_string(revmul::value_of(revmul::reverse(d))) << '\n';
    if (k && ok) {
      std::cout << "solution with k=" << *k << '\n';
    } else if (k) {
      std::cout << "mismatch: found k=" << *k << ", expected k=" << *expect_k << '\n';
    } else {
      std::cout << "not a solution (no integer k with 1 < k < " << base << ")\n";
    }
  }
  return ok ? kExitOk : kExitNotASolution;
}

int cmd_enumerate(int base, int length, const std::string& engine, std::optional<int> k_filter,
                  std::optional<std::size_t> limit, const std::string& format) {
  const revmul::EnumerationRequest req{base, length, k_filter, limit};
  std::vector<Solution> sols;
  if (engine == "naive") {
    sols = revmul::enumerate_naive(req);
  } else if (engine == "fast") {
    sols = revmul::enumerate_fast(req);
  } else {  // both: cross-check
    sols = revmul::enumerate_fast(req);
    const auto oracle = revmul::enumerate_naive(req);
    if (sols != oracle) {
      std::cerr << "anomaly: engines disagree (fast " << sols.size() << " vs naive "
                << oracle.size() << " solutions)\n";
      return kExitAnomaly;
    }
  }
  if (format == "json") {
    ordered_json j;
    j["base"] = base;
    j["length"] = length;
    j["engine"] = engine;
    ordered_json arr = ordered_json::array();
    for (const Solution& s : sols) arr.push_back(solution_json(s));
    j["solutions"] = arr;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "base,k,digits,value,reversal\n";
    for (const Solution& s : sols) {
      std::cout << base << ',' << s.k << ',' << join_digits(s.digits.digits(), ' ') << ','
                << revmul::to_string(s.value()) << ',' << revmul::to_string(s.reversal()) << '\n';
    }
  } else {
    print_solution_table(sols);
    std::cout << sols.size() << " solution(s)\n";
  }
  return kExitOk;
}

int cmd_family(int base, std::optional<int> a, const std::string& format) {
  ordered_json rows = ordered_json::array();
  std::vector<revmul::FamilyPair> pairs;
  if (a) {
    const revmul::FamilyParams params{base, *a};
    const auto five = revmul::family5(params);
    if (!five) {
      if (format == "json") {
        std::cout << ordered_json{{"base", base}, {"a", *a}, {"members", ordered_json::array()}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "a=" << *a << ": not in family (needs a | (n-a) and 1 < (n-a)/a < n)\n";
      }
      return kExitOk;
    }
    pairs.push_back(revmul::FamilyPair{params, *revmul::family4(params), *five});
  } else {
    pairs = revmul::family_all(base);
  }
  if (format == "json") {
    for (const auto& p : pairs) {
      ordered_json row;
      row["a"] = p.params.a;
      row["k"] = p.five.k;
      row["five"] = solution_json(p.five);
      row["four"] = solution_json(p.four);
      rows.push_back(row);
    }
    std::cout << ordered_json{{"base", base}, {"members", rows}}.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "base,a,k,five_digits,four_digits\n";
    for (const auto& p : pairs) {
      std::cout << base << ',' << p.params.a << ',' << p.five.k << ','
                << join_digits(p.five.digits.digits(), ' ') << ','
                << join_digits(p.four.digits.digits(), ' ') << '\n';
    }
  } else {
    std::cout << "a\tk\t5-digit\t4-digit\n";
    for (const auto& p : pairs) {
      std::cout << p.params.a << '\t' << p.five.k << '\t' << join_digits(p.five.digits.digits())
                << '\t' << join_digits(p.four.digits.digits()) << '\n';
    }
    std::cout << pairs.size() << " member(s)\n";
  }
  return kExitOk;
}

int cmd_project(int base, const std::string& digit_text, const std::string& format) {
  const DigitString d(base, parse_digit_list(digit_text));
  if (d.size() != 3 && d.size() != 5) {
    std::cerr << "project needs 3 or 5 digits, got " << d.size() << '\n';
    return kExitUsage;
  }
  const auto sol = revmul::to_solution(d);
  if (!sol) {
    std::cout << "input is not a solution; nothing to project\n";
    return kExitNotASolution;
  }
  const revmul::ProjectionOutcome outcome =
      d.size() == 5 ? revmul::question1_check(*sol) : revmul::kaczynski_project(*sol);
  const bool p_prime = revmul::is_prime(base + 1);
  // A missing any_k for a 3-digit solution with prime n+1 contradicts a
  // proved theorem; everywhere else it is a reportable finding.
  const bool anomaly = d.size() == 3 && outcome.counterexample() && p_prime;

  if (format == "json") {
    ordered_json j;
    j["base"] = base;
    j["k"] = sol->k;
    j["digits"] = d.digits();
    j["projected"] = outcome.projected.digits();
    j["same_k_holds"] = outcome.same_k_holds;
    if (outcome.any_k) j["any_k"] = *outcome.any_k;
    j["counterexample"] = outcome.counterexample();
    if (outcome.source_f) {
      ordered_json fc;
      fc["p"] = outcome.source_f->p;
      fc["s"] = outcome.source_f->s;
      if (outcome.source_f->f) fc["f"] = *outcome.source_f->f;
      fc["p_prime"] = outcome.source_f->p_prime;
      j["f_class"] = fc;
    }
    j["anomaly"] = anomaly;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "solution  k=" << sol->k << " digits " << join_digits(d.digits()) << " (base "
              << base << ")\n";
    std::cout << "projected " << join_digits(outcome.projected.digits()) << '\n';
    if (outcome.same_k_holds) {
      std::cout << "same k=" << sol->k << " holds\n";
    } else if (outcome.any_k) {
      std::cout << "same k fails, but k=" << *outcome.any_k << " works\n";
    } else {
      std::cout << "counterexample: no integer k works\n";
    }
    if (outcome.source_f) {
      std::cout << "f-class  p=" << outcome.source_f->p << " s=" << outcome.source_f->s;
      if (outcome.source_f->f) {
        std::cout << " f=" << *outcome.source_f->f;
      } else {
        std::cout << " f undefined (p does not divide s)";
      }
      std::cout << (outcome.source_f->p_prime ? " (p prime)\n" : " (p composite)\n");
    }
    if (anomaly) std::cout << "ANOMALY: 3-digit projection failed although n+1 is prime\n";
  }
  if (anomaly) return kExitAnomaly;
  if (outcome.counterexample()) return kExitFindings;
  return kExitOk;
}

void print_campaign_human(const revmul::CampaignReport& report) {
  std::cout << "campaign " << revmul::to_string(report.kind) << " over bases ["
            << report.config.n_lo << "," << report.config.n_hi << "]"
            << (report.config.require_prime_p ? " (n+1 prime only)" : "") << '\n';
  std::cout << report.to_csv();
  if (!report.counterexamples.empty()) {
    std::cout << report.counterexamples.size() << " counterexample(s):\n";
    for (const auto& ce : report.counterexamples) {
      std::cout << "  base " << ce.source.base() << " k=" << ce.source.k << " digits "
                << join_digits(ce.source.digits.digits()) << " f=";
      if (ce.f) {
        std::cout << *ce.f;
      } else {
        std::cout << "unclassified";
      }
      std::cout << (ce.p_prime ? " (p prime)" : " (p composite)") << '\n';
    }
  }
  if (!report.f1_hits.empty()) {
    std::cout << report.f1_hits.size() << " non-family f=1 solution(s):\n";
    for (const auto& s : report.f1_hits) {
      std::cout << "  base " << s.base() << " k=" << s.k << " digits "
                << join_digits(s.digits.digits()) << '\n';
    }
  }
  for (const auto& a : report.anomalies) {
    std::cout << "ANOMALY base " << a.base << ": " << a.what << '\n';
  }
  std::cout << "findings: " << report.findings << ", anomalies: " << report.anomalies.size()
            << ", wall: " << report.wall_seconds << "s\n";
}

int cmd_campaign(const std::string& kind_name, revmul::CampaignConfig cfg, bool resume,
                 const std::string& format) {
  const auto kind = revmul::parse_campaign_kind(kind_name);
  if (!kind) {
    std::cerr << "unknown campaign kind: " << kind_name << '\n';
    return kExitUsage;
  }
  const revmul::CampaignReport report =
      resume ? revmul::resume_campaign(*kind, cfg) : revmul::run_campaign(*kind, cfg);
  if (format == "json") {
    std::cout << report.to_json() << '\n';
  } else if (format == "csv") {
    std::cout << report.to_csv();
  } else {
    print_campaign_human(report);
  }
  if (!report.anomalies.empty()) return kExitAnomaly;
  if (report.findings > 0) return kExitFindings;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"base-n reverse-multiple toolkit: k*X = reverse(X) with 1 < k < n"};
  app.set_version_flag("--version", revmul::kEngineVersion);
  app.require_subcommand(1);
  app.fallthrough();  // app-level flags like --format may follow the subcommand

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "check one digit string against the equation");
  int v_base = 10;
  std::string v_digits;
  int v_k = 0;
  verify->add_option("--base", v_base, "base n")->required()->check(CLI::Range(2, 1 << 16));
  verify->add_option("--digits", v_digits, "comma-separated digits, most significant first")
      ->required();
  auto* v_k_opt = verify->add_option("--k", v_k, "expected multiplier");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list all length-L solutions for a base");
  int e_base = 10, e_length = 4, e_k = 0;
  std::size_t e_limit = 0;
  std::string e_engine = "fast";
  enumerate->add_option("--base", e_base, "base n")->required()->check(CLI::Range(2, 1 << 16));
  enumerate->add_option("--length", e_length, "digit count L")
      ->required()
      ->check(CLI::Range(1, 127));  // the 128-bit envelope rejects the rest
  enumerate->add_option("--engine", e_engine, "naive | fast | both (both cross-checks)")
      ->check(CLI::IsMember({"naive", "fast", "both"}))
      ->capture_default_str();
  auto* e_k_opt = enumerate->add_option("--k", e_k, "only this multiplier");
  auto* e_limit_opt = enumerate->add_option("--limit", e_limit, "stop after this many solutions");

  // family
  auto* family = app.add_subcommand("family", "structured 4/5-digit family members");
  int f_base = 10, f_a = 0;
  family->add_option("--base", f_base, "base n")->required()->check(CLI::Range(2, 1 << 16));
  auto* f_a_opt = family->add_option("--a", f_a, "family parameter a (omit to list all)");

  // project
  auto* project = app.add_subcommand("project", "delete the middle digit and re-check");
  int p_base = 10;
  std::string p_digits;
  project->add_option("--base", p_base, "base n")->required()->check(CLI::Range(2, 1 << 16));
  project->add_option("--digits", p_digits, "3 or 5 comma-separated digits")->required();

  // campaign
  auto* campaign = app.add_subcommand("campaign", "batch searches over a base range");
  campaign->require_subcommand(1);
  revmul::CampaignConfig cfg;
  cfg.lengths = {2, 3, 4, 5};  // survey default; the 5-digit kinds ignore it
  bool resume = false;
  bool all_bases = false;
  bool prime_only = false;
  std::vector<std::string> kind_names = {"counterexamples", "spectrum", "f1", "survey"};
  std::vector<CLI::App*> kind_cmds;
  for (const auto& name : kind_names) {
    auto* sub = campaign->add_subcommand(
        name, name == "counterexamples" ? "5-digit solutions whose projection solves for no k"
        : name == "spectrum"            ? "f-value histogram of all 5-digit solutions"
        : name == "f1"                  ? "non-family f=1 solutions (none were known)"
                                        : "existence survey per length");
    sub->add_option("--from", cfg.n_lo, "first base")->required();
    sub->add_option("--to", cfg.n_hi, "last base")->required();
    if (name == "survey") {
      sub->add_option("--lengths", cfg.lengths, "lengths to scan (subset of 2..7)")
          ->delimiter(',');
    }
    if (name == "counterexamples") {
      // Question 1 hypothesizes n+1 prime; that is the default scope here.
      sub->add_flag("--all-bases", all_bases, "scan composite n+1 too");
    } else {
      sub->add_flag("--prime-p", prime_only, "restrict to bases with n+1 prime");
    }
    sub->add_option("--workers", cfg.workers, "parallel base workers")
        ->envname("REVMUL_WORKERS")
        ->check(CLI::Range(1, 256));
    sub->add_option("--out", cfg.output_path, "JSONL record log path");
    sub->add_flag("--resume", resume, "continue a previous run at --out");
    kind_cmds.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;  // --help and --version exit 0
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(v_base, v_digits,
                        v_k_opt->count() ? std::optional<int>(v_k) : std::nullopt, format);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(e_base, e_length, e_engine,
                           e_k_opt->count() ? std::optional<int>(e_k) : std::nullopt,
                           e_limit_opt->count() ? std::optional<std::size_t>(e_limit)
                                                : std::nullopt,
                           format);
    }
    if (family->parsed()) {
      return cmd_family(f_base, f_a_opt->count() ? std::optional<int>(f_a) : std::nullopt, format);
    }
    if (project->parsed()) {
      return cmd_project(p_base, p_digits, format);
    }
    if (campaign->parsed()) {
      for (std::size_t i = 0; i < kind_cmds.size(); ++i) {
        if (kind_cmds[i]->parsed()) {
          cfg.require_prime_p = (kind_names[i] == "counterexamples") ? !all_bases : prime_only;
          return cmd_campaign(kind_names[i], cfg, resume, format);
        }
      }
    }
  } catch (const revmul::config_mismatch_error& e) {
    std::cerr << "config mismatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const revmul::log_format_error& e) {
    std::cerr << "corrupt log: " << e.what() << '\n';
    return kExitUsage;
  } catch (const revmul::capacity_error& e) {
    std::cerr << "arithmetic capacity exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
