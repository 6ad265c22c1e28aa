#include "bimulcon/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace bimulcon {

namespace {

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::domain_error("trailing characters in number '" + s + "'");
  return v;
}

std::pair<std::string, std::string> split_colon(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos)
    return {s, s};  // single value means a one-element range
  return {s.substr(0, pos), s.substr(pos + 1)};
}

}  // namespace

Range parse_range(const std::string& s) {
  try {
    auto [lo, hi] = split_colon(s);
    Range r{parse_int(lo), parse_int(hi)};
    if (r.lo > r.hi) throw std::domain_error("empty range");
    return r;
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::domain_error("malformed range '" + s + "', expected LO:HI");
  }
}

TRange parse_t_range(const std::string& s) {
  auto [lo, hi] = split_colon(s);
  TRange t;
  t.relative = lo.rfind("b+", 0) == 0 || lo == "b";
  bool hi_rel = hi.rfind("b+", 0) == 0 || hi == "b";
  if (t.relative != hi_rel)
    throw std::domain_error("t range must be uniformly absolute or b-relative: '" + s + "'");
  auto strip = [](const std::string& part) {
    if (part == "b") return std::string("0");
    if (part.rfind("b+", 0) == 0) return part.substr(2);
    return part;
  };
  try {
    t.lo = parse_int(strip(lo));
    t.hi = parse_int(strip(hi));
  } catch (const std::exception&) {
    throw std::domain_error("malformed t range '" + s + "', expected LO:HI or b+LO:b+HI");
  }
  if (t.lo > t.hi) throw std::domain_error("empty t range '" + s + "'");
  if (t.relative && t.lo < 0)
    throw std::domain_error("b-relative t range cannot start below b");
  return t;
}

std::uint64_t stable_cell_seed(std::uint64_t base, int a, int b, int r, int t) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t s = mix(base);
  for (int v : {a, b, r, t}) s = mix(s ^ static_cast<std::uint64_t>(v));
  return s;
}

namespace {

ScanCell run_cell(const ScanConfig& cfg, int a, int b, int r, int t) {
  ScanCell cell;
  cell.a = a;
  cell.b = b;
  cell.r = r;
  cell.t = t;
  cell.prime = cfg.prime;
  cell.seed = stable_cell_seed(cfg.base_seed, a, b, r, t);
  auto start = std::chrono::steady_clock::now();
  try {
    Certificate cert;
    if (cfg.escalate) {
      EscalationResult esc =
          certify_with_escalation(cfg.prime, a, b, r, t, cell.seed, cfg.max_trials);
      cert = esc.outcome();
      cell.escalated = esc.escalated.has_value();
    } else {
      cert = generic_rank_certificate(PrimeField(cfg.prime), a, b, r, t, cell.seed,
                                      cfg.max_trials);
    }
    cell.prime = cert.field.p;
    cell.rows = cert.rows;
    cell.cols = cert.cols;
    cell.rank = cert.achieved_rank;
    cell.target = cert.target_rank;
    cell.trials = cert.trials;
    cell.witness_seed = cert.witness_seed;
    cell.verdict = to_string(cert.verdict);
  } catch (const std::exception& e) {
    cell.verdict = "error";
    cell.error = e.what();
  }
  if (cfg.timing)
    cell.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return cell;
}

}  // namespace

ScanReport run_scan(const ScanConfig& cfg) {
  if (cfg.a.lo < 0 || cfg.b.lo < 0 || cfg.r.lo < 0)
    throw std::domain_error("scan ranges must be non-negative");
  if (cfg.jobs < 1) throw std::domain_error("jobs must be >= 1");
  PrimeField probe(cfg.prime);  // validate the prime up front
  (void)probe;

  struct CellSpec {
    int a, b, r, t;
  };
  std::vector<CellSpec> specs;
  for (int a = cfg.a.lo; a <= cfg.a.hi; ++a)
    for (int b = cfg.b.lo; b <= cfg.b.hi; ++b) {
      int tlo = cfg.t.relative ? b + cfg.t.lo : cfg.t.lo;
      int thi = cfg.t.relative ? b + cfg.t.hi : cfg.t.hi;
      tlo = std::max(tlo, b);  // the contraction needs t >= b
      for (int r = cfg.r.lo; r <= cfg.r.hi; ++r)
        for (int t = tlo; t <= thi; ++t) specs.push_back({a, b, r, t});
    }

  ScanReport rep;
  rep.config = cfg;
  rep.cells.resize(specs.size());
  auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      const CellSpec& s = specs[i];
      rep.cells[i] = run_cell(cfg, s.a, s.b, s.r, s.t);
    }
  };
  int jobs = std::min<int>(cfg.jobs, std::max<int>(1, static_cast<int>(specs.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (cfg.timing)
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  for (const auto& c : rep.cells) {
    if (c.verdict == "certified")
      ++rep.certified;
    else if (c.verdict == "inconclusive")
      ++rep.inconclusive;
    else
      ++rep.errors;
  }
  return rep;
}

std::string report_json(const ScanReport& rep) {
  nlohmann::json j;
  const ScanConfig& c = rep.config;
  j["meta"]["version"] = kVersion;
  j["meta"]["wall_ms"] = rep.wall_ms;
  j["meta"]["config"] = {
      {"a_lo", c.a.lo},       {"a_hi", c.a.hi},
      {"b_lo", c.b.lo},       {"b_hi", c.b.hi},
      {"r_lo", c.r.lo},       {"r_hi", c.r.hi},
      {"t_relative", c.t.relative},
      {"t_lo", c.t.lo},       {"t_hi", c.t.hi},
      {"prime", c.prime},     {"seed", c.base_seed},
      {"trials", c.max_trials},
      {"escalate", c.escalate}, {"timing", c.timing},
  };
  j["summary"] = {{"cells", rep.cells.size()},
                  {"certified", rep.certified},
                  {"inconclusive", rep.inconclusive},
                  {"errors", rep.errors}};
  j["cells"] = nlohmann::json::array();
  for (const auto& cell : rep.cells) {
    nlohmann::json jc = {
        {"a", cell.a},
        {"b", cell.b},
        {"r", cell.r},
        {"t", cell.t},
        {"prime", cell.prime},
        {"seed", cell.seed},
        {"rows", cell.rows},
        {"cols", cell.cols},
        {"rank", cell.rank},
        {"target", cell.target},
        {"trials", cell.trials},
        {"witness_seed", cell.witness_seed},
        {"escalated", cell.escalated},
        {"verdict", cell.verdict},
        {"error", cell.error},
        {"ms", cell.ms},
    };
    j["cells"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const ScanReport& rep) {
  std::ostringstream os;
  os << "a,b,r,t,prime,seed,rank,target,verdict,ms\n";
  for (const auto& c : rep.cells)
    os << c.a << ',' << c.b << ',' << c.r << ',' << c.t << ',' << c.prime << ',' << c.seed
       << ',' << c.rank << ',' << c.target << ',' << c.verdict << ',' << c.ms << '\n';
  return os.str();
}

}  // namespace bimulcon
