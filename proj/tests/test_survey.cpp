#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bimulcon/survey.hpp"

using namespace bimulcon;

TEST_CASE("range parsing") {
  Range r = parse_range("0:4");
  CHECK(r.lo == 0);
  CHECK(r.hi == 4);
  Range single = parse_range("3");
  CHECK(single.lo == 3);
  CHECK(single.hi == 3);
  CHECK_THROWS_AS(parse_range("4:2"), std::domain_error);
  CHECK_THROWS_AS(parse_range("x:2"), std::domain_error);
  CHECK_THROWS_AS(parse_range(""), std::domain_error);
  CHECK_THROWS_AS(parse_range("1:2:3"), std::domain_error);

  TRange t = parse_t_range("b+0:b+4");
  CHECK(t.relative);
  CHECK(t.lo == 0);
  CHECK(t.hi == 4);
  TRange tb = parse_t_range("b");
  CHECK(tb.relative);
  CHECK(tb.lo == 0);
  CHECK(tb.hi == 0);
  TRange ta = parse_t_range("2:6");
  CHECK_FALSE(ta.relative);
  CHECK(ta.lo == 2);
  CHECK(ta.hi == 6);
  CHECK_THROWS_AS(parse_t_range("b+1:5"), std::domain_error);  // mixed styles
  CHECK_THROWS_AS(parse_t_range("b+-1:b+2"), std::domain_error);
}

TEST_CASE("stable cell seeds") {
  std::uint64_t s = stable_cell_seed(1, 2, 2, 0, 2);
  CHECK(s == stable_cell_seed(1, 2, 2, 0, 2));
  std::set<std::uint64_t> seen;
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b)
      for (int r = 0; r <= 3; ++r)
        for (int t = b; t <= b + 3; ++t) seen.insert(stable_cell_seed(1, a, b, r, t));
  CHECK(seen.size() == 3 * 3 * 4 * 4);  // no collisions on the small box
  CHECK(stable_cell_seed(2, 2, 2, 0, 2) != s);
}

TEST_CASE("a tiny scan certifies everything") {
  ScanConfig cfg;
  cfg.a = {2, 3};
  cfg.b = {2, 2};
  cfg.r = {0, 1};
  cfg.t = {true, 0, 1};
  ScanReport rep = run_scan(cfg);
  CHECK(rep.cells.size() == 2 * 1 * 2 * 2);
  CHECK(rep.certified == static_cast<long long>(rep.cells.size()));
  CHECK(rep.all_certified());
  for (const auto& c : rep.cells) {
    CHECK(c.verdict == "certified");
    CHECK(c.rank == c.target);
    CHECK_FALSE(c.escalated);
    CHECK(c.prime == kDefaultPrime);
    CHECK(c.seed == stable_cell_seed(1, c.a, c.b, c.r, c.t));
    CHECK(c.ms == 0);  // timing off by default
  }
  CHECK(rep.wall_ms == 0);

  // cells come out in lexicographic (a, b, r, t) order
  for (std::size_t i = 1; i < rep.cells.size(); ++i) {
    auto key = [](const ScanCell& c) { return std::make_tuple(c.a, c.b, c.r, c.t); };
    CHECK(key(rep.cells[i - 1]) < key(rep.cells[i]));
  }
}

TEST_CASE("reports do not depend on the job count") {
  ScanConfig cfg;
  cfg.a = {2, 3};
  cfg.b = {2, 3};
  cfg.r = {0, 2};
  cfg.t = {true, 0, 2};
  ScanReport one = run_scan(cfg);
  cfg.jobs = 4;
  ScanReport four = run_scan(cfg);
  CHECK(report_json(one) == report_json(four));
  CHECK(report_csv(one) == report_csv(four));
}

TEST_CASE("report formats") {
  ScanConfig cfg;
  cfg.a = {2, 2};
  cfg.b = {2, 2};
  cfg.r = {0, 0};
  cfg.t = {true, 0, 0};
  ScanReport rep = run_scan(cfg);
  REQUIRE(rep.cells.size() == 1);

  std::string json = report_json(rep);
  CHECK(json.find("\"version\": \"0.1.0\"") != std::string::npos);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("\"verdict\": \"certified\"") != std::string::npos);
  CHECK(json.back() == '\n');

  std::string csv = report_csv(rep);
  CHECK(csv.rfind("a,b,r,t,prime,seed,rank,target,verdict,ms\n", 0) == 0);
  const ScanCell& c = rep.cells[0];
  std::string line = "2,2,0,2,65537," + std::to_string(c.seed) + "," +
                     std::to_string(c.rank) + "," + std::to_string(c.target) +
                     ",certified,0\n";
  CHECK(csv == "a,b,r,t,prime,seed,rank,target,verdict,ms\n" + line);
}

TEST_CASE("scan validation") {
  ScanConfig bad;
  bad.prime = 6;
  CHECK_THROWS_AS(run_scan(bad), std::domain_error);
  ScanConfig neg;
  neg.a = {-1, 2};
  CHECK_THROWS_AS(run_scan(neg), std::domain_error);
  ScanConfig jobs;
  jobs.jobs = 0;
  CHECK_THROWS_AS(run_scan(jobs), std::domain_error);
  ScanConfig absr;
  absr.t = {false, 1, 1};  // absolute t below every b is skipped, not an error
  absr.a = {2, 2};
  absr.b = {2, 2};
  absr.r = {0, 0};
  ScanReport rep = run_scan(absr);
  CHECK(rep.cells.empty());
  CHECK(rep.all_certified());
}