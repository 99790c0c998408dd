#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revmul/analysis.hpp"
#include "revmul/digits.hpp"

namespace revmul {

enum class CampaignKind { counterexamples, spectrum, f1_nonfamily, survey };

std::string to_string(CampaignKind kind);
std::optional<CampaignKind> parse_campaign_kind(const std::string& name);

struct CampaignConfig {
  int n_lo = 3;
  int n_hi = 3;
  std::vector<int> lengths = {5};  // survey scans these; other kinds are 5-digit by nature
  bool require_prime_p = false;    // restrict to bases with n+1 prime
  int workers = 1;                 // does not affect the record stream
  std::string output_path;         // JSONL log; empty = in-memory only
};

// 64-bit hash of everything that determines the record stream (kind, range,
// lengths, prime filter). Workers and output path are deliberately excluded.
std::string config_hash(CampaignKind kind, const CampaignConfig& cfg);

// A 5-digit solution whose middle-digit deletion solves for no multiplier.
struct CounterexampleRecord {
  Solution source;
  ProjectionOutcome outcome;
  std::optional<int> f;
  bool p_prime = false;
};

struct AnomalyRecord {
  int base = 0;
  std::string what;
};

// Per-base tallies; which fields are populated depends on the campaign kind.
struct BaseReport {
  int base = 0;
  bool p_prime = false;
  std::map<int, std::uint64_t> solutions_by_length;
  std::uint64_t counterexample_count = 0;
  std::map<int, std::uint64_t> f_histogram;  // keys -1..2
  std::uint64_t f_unclassified = 0;
  std::map<int, bool> exists_by_length;      // survey only
  std::uint64_t finding_count = 0;
  std::uint64_t anomaly_count = 0;
};

struct CampaignReport {
  CampaignKind kind = CampaignKind::counterexamples;
  CampaignConfig config;
  std::string hash;
  std::vector<BaseReport> bases;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<Solution> f1_hits;  // non-family f = 1 solutions
  std::vector<AnomalyRecord> anomalies;
  std::uint64_t findings = 0;
  double wall_seconds = 0.0;
  std::string engine_version;

  std::string to_json() const;  // report document
  std::string to_csv() const;   // one row per base
};

// Fresh run; overwrites output_path when set. Record order is canonical
// (base, then k, then value) and independent of the worker count.
CampaignReport run_campaign(CampaignKind kind, const CampaignConfig& cfg);

// Continues a previous run: bases with a base_complete marker in the log are
// reused verbatim, the rest are recomputed, and the rewritten log is
// byte-identical to an uninterrupted run. Missing or empty log = full run.
CampaignReport resume_campaign(CampaignKind kind, const CampaignConfig& cfg);

// The four named searches.
std::vector<CounterexampleRecord> find_counterexamples(const CampaignConfig& cfg);
CampaignReport f_spectrum(const CampaignConfig& cfg);
std::vector<Solution> f1_nonfamily_search(const CampaignConfig& cfg);
CampaignReport existence_survey(const CampaignConfig& cfg);

// Log file does not match the requested campaign.
class config_mismatch_error : public std::runtime_error {
 public:
  explicit config_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

// Log file is damaged; line_number is 1-based.
class log_format_error : public std::runtime_error {
 public:
  log_format_error(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line_number(line_number) {}
  int line_number;
};

}  // namespace revmul
