#pragma once

// Batch verification of chain-theory properties over configurable
// (system, order, depth) cells, plus synthetic word-combinatorics checks.

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "aslw/chains.hpp"
#include "aslw/sl_table.hpp"

namespace aslw {

struct CellSpec {
  std::string system;  // "G2", "F4", ...
  std::string order;   // permutation, e.g. "0,2,1" or "021"
  int depth = 0;       // 0 picks a per-suite default
};

struct Violation {
  std::string suite;
  std::string cell;
  std::string instance;  // degree vectors and words of the failing case
  std::string replay;    // CLI invocation reproducing the context
};

struct VerifyWarning {
  std::string suite;
  std::string cell;
  std::string message;
};

struct SuiteResult {
  std::string name;
  std::string cell;
  long long checks = 0;
  std::vector<Violation> violations;
  std::vector<VerifyWarning> warnings;
  double seconds = 0.0;
};

// Observed extrema across all cells of one run.
struct RunStatistics {
  int64_t max_s = 0;
  std::string max_s_where;
  int64_t max_c = 0;
  std::string max_c_where;
  double max_u_ratio = 0.0;  // |u| / |delta|, flagged by warning when >= 10
  std::string max_u_where;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  RunStatistics stats;
  bool ok() const;
  long long total_checks() const;
  long long total_violations() const;
};

struct VerifyConfig {
  std::vector<std::string> suites;  // empty = all
  std::vector<CellSpec> cells;
  bool long_running = false;
  int threads = 0;  // 0 = hardware concurrency
  long long word_lemma_cases = 10000;
  unsigned long long seed = 20260816ull;
};

const std::vector<std::string>& all_suite_names();

// Expands one system into cells for every order of its extended alphabet.
std::vector<CellSpec> all_order_cells(const std::string& system, int depth);

VerifyReport run_suite(const VerifyConfig& config);

std::string report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

// Check bookkeeping for one (suite, cell) pair. Thread-compatible: each
// Recorder owns its SuiteResult; the shared statistics block is locked.
class Recorder {
 public:
  Recorder(SuiteResult* out, std::string cell, std::string replay,
           RunStatistics* stats = nullptr, std::mutex* stats_mu = nullptr);
  void check(bool ok, const std::string& instance);
  void warn(const std::string& message);
  void note_s(int64_t s, const std::string& where);
  void note_c(int64_t c, const std::string& where);
  void note_u_ratio(double ratio, const std::string& where);

 private:
  SuiteResult* out_;
  std::string cell_;
  std::string replay_;
  RunStatistics* stats_;
  std::mutex* stats_mu_;
};

// Periodicity checkers for a single chain, anchored at its u / l landmark.
void check_dec_periodicity(SLTable& t, const AffineCoeffs& base, Recorder& rec);
void check_inc_periodicity(SLTable& t, const AffineCoeffs& base, Recorder& rec);

struct ConnectivityOutcome {
  bool criterion = false;  // costandard-left != standard-left of SL_i(delta), i > 1
  bool direct = false;     // every beta_i pairs nonzero with an earlier beta_j
};
ConnectivityOutcome check_connectivity(SLTable& t, Recorder& rec);

// Tightness tables for the s and c statistics across the listed systems.
void check_tables(const std::vector<std::string>& systems, Recorder& rec);

}  // namespace aslw
