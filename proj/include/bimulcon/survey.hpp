#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bimulcon/rank.hpp"

namespace bimulcon {

inline constexpr const char* kVersion = "0.1.0";

struct Range {
  int lo = 0, hi = 0;
};

/* t is allowed to track b ("b+0:b+4") or stand alone ("2:6") */
struct TRange {
  bool relative = true;
  int lo = 0, hi = 4;
};

Range parse_range(const std::string& s);
TRange parse_t_range(const std::string& s);

struct ScanConfig {
  Range a{2, 4}, b{2, 4}, r{0, 4};
  TRange t{};
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t base_seed = 1;
  int max_trials = 3;
  int jobs = 1;
  bool escalate = true;
  bool timing = false;  // leave wall-clock fields at 0 for reproducible reports
};

struct ScanCell {
  int a = 0, b = 0, r = 0, t = 0;
  std::uint64_t prime = 0;  // prime the verdict was reached at
  std::uint64_t seed = 0;   // per-cell base seed
  long long rows = 0, cols = 0;
  long long rank = 0;    // best achieved
  long long target = 0;  // min(rows, cols)
  int trials = 0;
  std::uint64_t witness_seed = 0;
  bool escalated = false;
  std::string verdict;  // certified | inconclusive | error
  std::string error;
  long long ms = 0;
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanCell> cells;
  long long wall_ms = 0;
  long long certified = 0, inconclusive = 0, errors = 0;

  bool all_certified() const { return inconclusive == 0 && errors == 0; }
};

/* deterministic per-cell seed, decoupled from scan order and job count */
std::uint64_t stable_cell_seed(std::uint64_t base, int a, int b, int r, int t);

ScanReport run_scan(const ScanConfig& cfg);

std::string report_json(const ScanReport& rep);
std::string report_csv(const ScanReport& rep);

}  // namespace bimulcon
