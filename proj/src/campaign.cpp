#include "revmul/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include "json.hpp"

#include "revmul/enumerate.hpp"
#include "revmul/families.hpp"
#include "revmul/version.hpp"

namespace revmul {

using ordered_json = nlohmann::ordered_json;

std::string to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::counterexamples: return "counterexamples";
    case CampaignKind::spectrum: return "spectrum";
    case CampaignKind::f1_nonfamily: return "f1";
    case CampaignKind::survey: return "survey";
  }
  return "unknown";
}

std::optional<CampaignKind> parse_campaign_kind(const std::string& name) {
  if (name == "counterexamples") return CampaignKind::counterexamples;
  if (name == "spectrum") return CampaignKind::spectrum;
  if (name == "f1") return CampaignKind::f1_nonfamily;
  if (name == "survey") return CampaignKind::survey;
  return std::nullopt;
}

namespace {

// Everything that determines the record stream. Workers and output path are
// execution details and must not change the hash.
std::string canonical_config(CampaignKind kind, const CampaignConfig& cfg) {
  std::ostringstream os;
  os << "kind=" << to_string(kind) << ";lo=" << cfg.n_lo << ";hi=" << cfg.n_hi << ";lengths=";
  for (std::size_t i = 0; i < cfg.lengths.size(); ++i) {
    if (i > 0) os << ',';
    os << cfg.lengths[i];
  }
  os << ";prime_p=" << (cfg.require_prime_p ? 1 : 0);
  return os.str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Non-survey campaigns are 5-digit scans by nature; survey keeps the
// requested lengths (validated, sorted, deduplicated).
CampaignConfig normalize(CampaignKind kind, CampaignConfig cfg) {
  if (cfg.n_lo < 3 || cfg.n_lo > cfg.n_hi) {
    throw std::invalid_argument("base range must satisfy 3 <= n_lo <= n_hi");
  }
  if (cfg.workers < 1) {
    throw std::invalid_argument("worker count must be at least 1");
  }
  if (kind == CampaignKind::survey) {
    if (cfg.lengths.empty()) {
      throw std::invalid_argument("survey needs at least one length");
    }
    std::set<int> uniq(cfg.lengths.begin(), cfg.lengths.end());
    for (int len : uniq) {
      if (len < 2 || len > 7) {
        throw std::invalid_argument("survey lengths must lie in 2..7, got " + std::to_string(len));
      }
    }
    cfg.lengths.assign(uniq.begin(), uniq.end());
  } else {
    cfg.lengths = {5};
  }
  return cfg;
}

std::vector<int> base_list(const CampaignConfig& cfg) {
  std::vector<int> bases;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (cfg.require_prime_p && !is_prime(n + 1)) continue;
    bases.push_back(n);
  }
  return bases;
}

ordered_json solution_fields(const Solution& s, const std::optional<int>& f) {
  ordered_json j;
  j["base"] = s.base();
  j["k"] = s.k;
  j["digits"] = s.digits.digits();
  j["value"] = to_string(s.value());
  j["reversal"] = to_string(s.reversal());
  if (f) {
    j["f"] = *f;
  } else {
    j["f"] = nullptr;
  }
  j["p_prime"] = is_prime(s.base() + 1);
  return j;
}

// One scanned base: its report row, its typed results, and its serialized
// log records (base_complete last).
struct BaseOutcome {
  BaseReport report;
  std::vector<std::string> lines;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<Solution> f1_hits;
  std::vector<AnomalyRecord> anomalies;
};

ordered_json tallies_json(const BaseReport& r) {
  ordered_json solutions = ordered_json::object();
  for (const auto& [len, count] : r.solutions_by_length) {
    solutions[std::to_string(len)] = count;
  }
  ordered_json t;
  t["solutions"] = solutions;
  t["counterexamples"] = r.counterexample_count;
  t["findings"] = r.finding_count;
  t["anomalies"] = r.anomaly_count;
  return t;
}

ordered_json histogram_json(const BaseReport& r) {
  ordered_json h;
  for (int f = -1; f <= 2; ++f) {
    const auto it = r.f_histogram.find(f);
    h[std::to_string(f)] = it == r.f_histogram.end() ? 0 : it->second;
  }
  h["unclassified"] = r.f_unclassified;
  return h;
}

std::string base_complete_line(CampaignKind kind, const BaseReport& r) {
  ordered_json j;
  j["record_type"] = "base_complete";
  j["base"] = r.base;
  j["p_prime"] = r.p_prime;
  j["tallies"] = tallies_json(r);
  if (kind != CampaignKind::survey) {
    j["f_histogram"] = histogram_json(r);
  } else {
    ordered_json e = ordered_json::object();
    for (const auto& [len, found] : r.exists_by_length) {
      e[std::to_string(len)] = found;
    }
    j["exists"] = e;
  }
  return j.dump();
}

void note_anomaly(BaseOutcome& out, int base, const std::string& what) {
  ordered_json j;
  j["record_type"] = "anomaly";
  j["base"] = base;
  j["what"] = what;
  out.lines.push_back(j.dump());
  out.anomalies.push_back(AnomalyRecord{base, what});
  out.report.anomaly_count++;
}

// Scan one base for the three 5-digit campaign kinds. Survey handled apart.
BaseOutcome scan_base_solutions(CampaignKind kind, int base) {
  BaseOutcome out;
  out.report.base = base;
  out.report.p_prime = is_prime(base + 1);
  const auto solutions = enumerate_fast(EnumerationRequest{base, 5, std::nullopt, std::nullopt});
  out.report.solutions_by_length[5] = solutions.size();
  for (const Solution& sol : solutions) {
    const ProjectionOutcome q1 = question1_check(sol);
    const FClassification& fc = *q1.source_f;

    ordered_json rec;
    rec["record_type"] = "solution";
    rec.update(solution_fields(sol, fc.f));
    out.lines.push_back(rec.dump());

    if (fc.f) {
      out.report.f_histogram[*fc.f]++;
    } else {
      out.report.f_unclassified++;
    }
    if (fc.anomaly) {
      std::ostringstream what;
      what << "solution " << sol << " with prime p=" << fc.p
           << " has no f in {-1,0,1,2} (s=" << fc.s << ")";
      note_anomaly(out, base, what.str());
    }
    if (fc.f && !derived_identity_check(sol)) {
      std::ostringstream what;
      what << "derived identity fails for " << sol << " (f=" << *fc.f << ")";
      note_anomaly(out, base, what.str());
    }

    if (q1.counterexample()) {
      out.report.counterexample_count++;
      out.counterexamples.push_back(CounterexampleRecord{sol, q1, fc.f, fc.p_prime});
      ordered_json ce;
      ce["record_type"] = "counterexample";
      ce.update(solution_fields(sol, fc.f));
      ce["projected"] = q1.projected.digits();
      ce["same_k_holds"] = q1.same_k_holds;
      out.lines.push_back(ce.dump());
      if (kind == CampaignKind::counterexamples) {
        out.report.finding_count++;
      } else if (kind == CampaignKind::spectrum && fc.f && *fc.f != 0) {
        out.report.finding_count++;  // counterexample outside the known f=0 pattern
      }
    }
    if (kind == CampaignKind::spectrum && fc.f && (*fc.f == -1 || *fc.f == 2)) {
      out.report.finding_count++;  // conjectured-impossible f value observed
    }
    if (kind == CampaignKind::f1_nonfamily && fc.f && *fc.f == 1 && !is_in_family(sol)) {
      out.report.finding_count++;
      out.f1_hits.push_back(sol);
    }
  }
  out.lines.push_back(base_complete_line(kind, out.report));
  return out;
}

BaseOutcome scan_base_survey(const CampaignConfig& cfg, int base) {
  BaseOutcome out;
  out.report.base = base;
  out.report.p_prime = is_prime(base + 1);
  for (int len : cfg.lengths) {
    out.report.exists_by_length[len] = exists_solution(base, len);
  }
  const auto has = [&](int len) {
    const auto it = out.report.exists_by_length.find(len);
    return it != out.report.exists_by_length.end() ? std::optional<bool>(it->second) : std::nullopt;
  };
  // Proved facts: 2-digit iff 3-digit, and the corollary for lengths 4 and 5.
  const auto e2 = has(2), e3 = has(3);
  if (e2 && e3 && *e2 != *e3) {
    note_anomaly(out, base,
                 "exists(2)=" + std::to_string(*e2) + " but exists(3)=" + std::to_string(*e3));
  }
  for (int len : {4, 5}) {
    const auto e = has(len);
    if (e && !*e) {
      note_anomaly(out, base, "no " + std::to_string(len) + "-digit solution despite base >= 3");
    }
  }
  out.lines.push_back(base_complete_line(CampaignKind::survey, out.report));
  return out;
}

BaseOutcome scan_base(CampaignKind kind, const CampaignConfig& cfg, int base) {
  try {
    return kind == CampaignKind::survey ? scan_base_survey(cfg, base)
                                        : scan_base_solutions(kind, base);
  } catch (const capacity_error& e) {
    throw capacity_error("base " + std::to_string(base) + ": " + e.what());
  }
}

std::string header_line(CampaignKind kind, const CampaignConfig& cfg, const std::string& hash) {
  ordered_json j;
  j["record_type"] = "header";
  j["campaign"] = to_string(kind);
  j["config_hash"] = hash;
  j["engine_version"] = kEngineVersion;
  ordered_json c;
  c["n_lo"] = cfg.n_lo;
  c["n_hi"] = cfg.n_hi;
  c["lengths"] = cfg.lengths;
  c["require_prime_p"] = cfg.require_prime_p;
  j["config"] = c;
  return j.dump();
}

// Rebuild a base's outcome from its stored log lines (enumeration skipped;
// the cheap analysis is recomputed and checked against the stored tallies).
BaseOutcome replay_base(CampaignKind kind, int base,
                        const std::vector<std::pair<int, ordered_json>>& records,
                        const std::vector<std::string>& raw_lines) {
  BaseOutcome out;
  out.report.base = base;
  out.report.p_prime = is_prime(base + 1);
  out.lines = raw_lines;
  if (kind != CampaignKind::survey) out.report.solutions_by_length[5] = 0;
  const ordered_json* stored_complete = nullptr;
  int complete_line = 0;
  for (const auto& [line_no, rec] : records) {
    const std::string type = rec.at("record_type").get<std::string>();
    if (type == "solution") {
      const Solution sol{rec.at("k").get<int>(),
                         DigitString(base, rec.at("digits").get<std::vector<int>>())};
      if (check_solution(sol.digits) != std::optional<int>(sol.k)) {
        throw log_format_error(line_no, "stored record is not a solution");
      }
      if (kind == CampaignKind::survey) {
        throw log_format_error(line_no, "solution record in a survey log");
      }
      out.report.solutions_by_length[5]++;
      const ProjectionOutcome q1 = question1_check(sol);
      const FClassification& fc = *q1.source_f;
      if (fc.f) {
        out.report.f_histogram[*fc.f]++;
      } else {
        out.report.f_unclassified++;
      }
      if (q1.counterexample()) {
        out.report.counterexample_count++;
        out.counterexamples.push_back(CounterexampleRecord{sol, q1, fc.f, fc.p_prime});
        if (kind == CampaignKind::counterexamples) {
          out.report.finding_count++;
        } else if (kind == CampaignKind::spectrum && fc.f && *fc.f != 0) {
          out.report.finding_count++;
        }
      }
      if (kind == CampaignKind::spectrum && fc.f && (*fc.f == -1 || *fc.f == 2)) {
        out.report.finding_count++;
      }
      if (kind == CampaignKind::f1_nonfamily && fc.f && *fc.f == 1 && !is_in_family(sol)) {
        out.report.finding_count++;
        out.f1_hits.push_back(sol);
      }
    } else if (type == "anomaly") {
      out.anomalies.push_back(AnomalyRecord{base, rec.at("what").get<std::string>()});
      out.report.anomaly_count++;
    } else if (type == "base_complete") {
      stored_complete = &rec;
      complete_line = line_no;
      if (kind == CampaignKind::survey) {
        for (const auto& [len, found] : rec.at("exists").items()) {
          out.report.exists_by_length[std::stoi(len)] = found.get<bool>();
        }
      }
    }
    // counterexample records carry no state beyond their solution record
  }
  if (stored_complete == nullptr) {
    throw log_format_error(0, "internal: replay of an incomplete base");
  }
  if (base_complete_line(kind, out.report) != raw_lines.back()) {
    throw log_format_error(complete_line, "stored tallies do not match their records");
  }
  return out;
}

struct ParsedLog {
  std::map<int, std::vector<std::pair<int, ordered_json>>> records_by_base;
  std::map<int, std::vector<std::string>> raw_by_base;
  std::set<int> complete;
};

ParsedLog parse_log(const std::string& path, const std::string& want_hash) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  ParsedLog parsed;
  if (lines.empty()) return parsed;

  ordered_json header;
  try {
    header = ordered_json::parse(lines[0]);
  } catch (const ordered_json::exception& e) {
    if (lines.size() == 1) return parsed;  // torn header from an early kill
    throw log_format_error(1, std::string("unparseable header: ") + e.what());
  }
  if (header.value("record_type", "") != "header") {
    throw log_format_error(1, "first line is not a campaign header");
  }
  if (header.value("config_hash", "") != want_hash) {
    throw config_mismatch_error("log " + path + " was written for config hash " +
                                header.value("config_hash", "?") + ", requested " + want_hash);
  }
  if (header.value("engine_version", "") != kEngineVersion) {
    throw config_mismatch_error("log " + path + " was written by '" +
                                header.value("engine_version", "?") + "', this is '" +
                                kEngineVersion + "'");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    ordered_json rec;
    try {
      rec = ordered_json::parse(lines[i]);
    } catch (const ordered_json::exception& e) {
      // A torn final line is the expected shape of an interrupt, not
      // corruption; its base has no completion marker and is redone.
      if (i + 1 == lines.size()) break;
      throw log_format_error(line_no, std::string("unparseable record: ") + e.what());
    }
    if (!rec.contains("base") || !rec.contains("record_type")) {
      if (i + 1 == lines.size()) break;
      throw log_format_error(line_no, "record lacks base/record_type");
    }
    const int base = rec.at("base").get<int>();
    parsed.records_by_base[base].emplace_back(line_no, rec);
    parsed.raw_by_base[base].push_back(lines[i]);
    if (rec.at("record_type").get<std::string>() == "base_complete") {
      parsed.complete.insert(base);
    }
  }
  return parsed;
}

CampaignReport execute(CampaignKind kind, CampaignConfig cfg, const ParsedLog* preloaded) {
  const auto started = std::chrono::steady_clock::now();
  cfg = normalize(kind, cfg);
  const std::string hash = config_hash(kind, cfg);
  const std::vector<int> bases = base_list(cfg);

  std::ofstream log;
  if (!cfg.output_path.empty()) {
    log.open(cfg.output_path, std::ios::trunc);
    if (!log) {
      throw std::runtime_error("cannot open output path: " + cfg.output_path);
    }
    log << header_line(kind, cfg, hash) << '\n' << std::flush;
  }

  // One slot per base; workers fill them, the main thread writes the
  // contiguous prefix so the stream order never depends on scheduling.
  using Slot = std::variant<std::monostate, BaseOutcome, std::exception_ptr>;
  std::vector<Slot> slots(bases.size());
  std::mutex mu;
  std::condition_variable filled;
  std::atomic<std::size_t> next_task{0};

  const auto run_one = [&](std::size_t i) {
    Slot slot;
    if (preloaded && preloaded->complete.count(bases[i])) {
      try {
        slot = replay_base(kind, bases[i], preloaded->records_by_base.at(bases[i]),
                           preloaded->raw_by_base.at(bases[i]));
      } catch (...) {
        slot = std::current_exception();
      }
    } else {
      try {
        slot = scan_base(kind, cfg, bases[i]);
      } catch (...) {
        slot = std::current_exception();
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    slots[i] = std::move(slot);
    filled.notify_all();
  };

  const std::size_t worker_count =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), std::max<std::size_t>(bases.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < worker_count; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next_task++; i < bases.size(); i = next_task++) run_one(i);
    });
  }

  CampaignReport report;
  report.kind = kind;
  report.config = cfg;
  report.hash = hash;
  report.engine_version = kEngineVersion;

  std::exception_ptr failure;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    filled.wait(lock, [&] { return slots[i].index() != 0; });
    if (std::holds_alternative<std::exception_ptr>(slots[i])) {
      if (!failure) failure = std::get<std::exception_ptr>(slots[i]);
      continue;  // keep draining so threads can finish
    }
    BaseOutcome out = std::move(std::get<BaseOutcome>(slots[i]));
    lock.unlock();
    if (failure) continue;
    if (log.is_open()) {
      for (const std::string& l : out.lines) log << l << '\n';
      log << std::flush;  // checkpoint granularity: one base
    }
    report.findings += out.report.finding_count;
    report.bases.push_back(std::move(out.report));
    std::move(out.counterexamples.begin(), out.counterexamples.end(),
              std::back_inserter(report.counterexamples));
    std::move(out.f1_hits.begin(), out.f1_hits.end(), std::back_inserter(report.f1_hits));
    std::move(out.anomalies.begin(), out.anomalies.end(), std::back_inserter(report.anomalies));
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

std::string config_hash(CampaignKind kind, const CampaignConfig& cfg) {
  return fnv1a_hex(canonical_config(kind, normalize(kind, cfg)));
}

CampaignReport run_campaign(CampaignKind kind, const CampaignConfig& cfg) {
  return execute(kind, cfg, nullptr);
}

CampaignReport resume_campaign(CampaignKind kind, const CampaignConfig& cfg) {
  if (cfg.output_path.empty()) {
    throw std::invalid_argument("resume needs an output path");
  }
  std::ifstream probe(cfg.output_path);
  if (!probe.good()) {
    return execute(kind, cfg, nullptr);  // nothing to resume
  }
  probe.close();
  const CampaignConfig norm = normalize(kind, cfg);
  const ParsedLog parsed = parse_log(norm.output_path, config_hash(kind, norm));
  const std::vector<int> expected = base_list(norm);
  for (const auto& [base, records] : parsed.records_by_base) {
    if (std::find(expected.begin(), expected.end(), base) == expected.end()) {
      throw log_format_error(records.front().first,
                             "record for base " + std::to_string(base) +
                                 " which this campaign does not scan");
    }
  }
  return execute(kind, cfg, &parsed);
}

std::vector<CounterexampleRecord> find_counterexamples(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::counterexamples, cfg).counterexamples;
}

CampaignReport f_spectrum(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::spectrum, cfg);
}

std::vector<Solution> f1_nonfamily_search(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::f1_nonfamily, cfg).f1_hits;
}

CampaignReport existence_survey(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::survey, cfg);
}

std::string CampaignReport::to_json() const {
  ordered_json j;
  j["campaign"] = revmul::to_string(kind);
  ordered_json c;
  c["n_lo"] = config.n_lo;
  c["n_hi"] = config.n_hi;
  c["lengths"] = config.lengths;
  c["require_prime_p"] = config.require_prime_p;
  c["workers"] = config.workers;
  c["output_path"] = config.output_path;
  j["config"] = c;
  j["config_hash"] = hash;
  j["engine_version"] = engine_version;
  j["wall_seconds"] = wall_seconds;
  j["findings"] = findings;
  ordered_json rows = ordered_json::array();
  for (const BaseReport& r : bases) {
    ordered_json row;
    row["base"] = r.base;
    row["p_prime"] = r.p_prime;
    if (kind == CampaignKind::survey) {
      ordered_json e = ordered_json::object();
      for (const auto& [len, found] : r.exists_by_length) e[std::to_string(len)] = found;
      row["exists"] = e;
    } else {
      row["tallies"] = tallies_json(r);
      row["f_histogram"] = histogram_json(r);
    }
    rows.push_back(row);
  }
  j["bases"] = rows;
  ordered_json ces = ordered_json::array();
  for (const CounterexampleRecord& ce : counterexamples) {
    ordered_json rec = solution_fields(ce.source, ce.f);
    rec["projected"] = ce.outcome.projected.digits();
    rec["same_k_holds"] = ce.outcome.same_k_holds;
    ces.push_back(rec);
  }
  j["counterexamples"] = ces;
  ordered_json hits = ordered_json::array();
  for (const Solution& s : f1_hits) hits.push_back(solution_fields(s, 1));
  j["f1_hits"] = hits;
  ordered_json anom = ordered_json::array();
  for (const AnomalyRecord& a : anomalies) {
    anom.push_back(ordered_json{{"base", a.base}, {"what", a.what}});
  }
  j["anomalies"] = anom;
  return j.dump(2);
}

std::string CampaignReport::to_csv() const {
  std::ostringstream os;
  if (kind == CampaignKind::survey) {
    os << "base,p_prime";
    for (int len : config.lengths) os << ",exists_" << len;
    os << '\n';
    for (const BaseReport& r : bases) {
      os << r.base << ',' << (r.p_prime ? 1 : 0);
      for (int len : config.lengths) {
        const auto it = r.exists_by_length.find(len);
        os << ',' << (it != r.exists_by_length.end() && it->second ? 1 : 0);
      }
      os << '\n';
    }
    return os.str();
  }
  os << "base,p_prime,solutions_5,counterexamples,f_-1,f_0,f_1,f_2,f_unclassified,findings,anomalies\n";
  for (const BaseReport& r : bases) {
    const auto hist = [&](int f) -> std::uint64_t {
      const auto it = r.f_histogram.find(f);
      return it == r.f_histogram.end() ? 0 : it->second;
    };
    const auto sols = r.solutions_by_length.count(5) ? r.solutions_by_length.at(5) : 0;
    os << r.base << ',' << (r.p_prime ? 1 : 0) << ',' << sols << ',' << r.counterexample_count
       << ',' << hist(-1) << ',' << hist(0) << ',' << hist(1) << ',' << hist(2) << ','
       << r.f_unclassified << ',' << r.finding_count << ',' << r.anomaly_count << '\n';
  }
  return os.str();
}

}  // namespace revmul
