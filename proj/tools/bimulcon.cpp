#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bimulcon/cohomology.hpp"
#include "bimulcon/gridcurve.hpp"
#include "bimulcon/grid.hpp"
#include "bimulcon/rank.hpp"
#include "bimulcon/reduction.hpp"
#include "bimulcon/survey.hpp"

namespace {

using namespace bimulcon;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

std::uint64_t env_default_prime() {
  const char* env = std::getenv("BIMULCON_PRIME");
  if (!env) return kDefaultPrime;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw std::domain_error(std::string("BIMULCON_PRIME is not a number: '") + env + "'");
  return static_cast<std::uint64_t>(v);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << text;
}

json certificate_json(const Certificate& c, bool escalated) {
  return json{{"a", c.a},
              {"b", c.b},
              {"r", c.r},
              {"t", c.t},
              {"field", c.field.to_string()},
              {"rows", c.rows},
              {"cols", c.cols},
              {"target", c.target_rank},
              {"rank", c.achieved_rank},
              {"trials", c.trials},
              {"base_seed", c.base_seed},
              {"witness_seed", c.witness_seed},
              {"escalated", escalated},
              {"verdict", to_string(c.verdict)}};
}

struct CertifyArgs {
  int a = 0, b = 0, r = 0, t = 0;
  std::uint64_t prime = 0, seed = 1;
  int trials = 3;
  bool no_escalate = false, as_json = false;
  std::string export_path;
};

int run_certify(const CertifyArgs& o) {
  EscalationResult esc;
  if (o.no_escalate)
    esc = EscalationResult{
        generic_rank_certificate(PrimeField(o.prime), o.a, o.b, o.r, o.t, o.seed, o.trials),
        std::nullopt};
  else
    esc = certify_with_escalation(o.prime, o.a, o.b, o.r, o.t, o.seed, o.trials);
  const Certificate& cert = esc.outcome();
  if (!o.export_path.empty()) {
    std::uint64_t wseed = cert.certified() ? cert.witness_seed : cert.base_seed;
    PrimeField f(cert.field.p);
    MapMatrix<PrimeField> M =
        build_mulcon_matrix(random_biform(o.a, o.b, f, wseed), o.r, o.t);
    std::ofstream os(o.export_path);
    if (!os) throw std::runtime_error("cannot open '" + o.export_path + "' for writing");
    export_matrix_market(M, os);
  }
  if (o.as_json) {
    std::cout << certificate_json(cert, esc.escalated.has_value()).dump(2) << "\n";
  } else {
    std::cout << "certify a=" << cert.a << " b=" << cert.b << " r=" << cert.r
              << " t=" << cert.t << " over " << cert.field.to_string() << ": "
              << to_string(cert.verdict) << " (rank " << cert.achieved_rank << "/"
              << cert.target_rank << ", " << cert.rows << "x" << cert.cols << ", trials "
              << cert.trials;
    if (cert.certified()) std::cout << ", witness seed " << cert.witness_seed;
    if (esc.escalated) std::cout << ", escalated";
    std::cout << ")\n";
  }
  return cert.certified() ? kExitOk : kExitInconclusive;
}

struct ScanArgs {
  std::string a = "2:4", b = "2:4", r = "0:4", t = "b+0:b+4";
  std::uint64_t prime = 0, seed = 1;
  int trials = 3, jobs = 1;
  bool timing = false, no_escalate = false;
  std::string json_path, csv_path;
};

int run_scan_cmd(const ScanArgs& o) {
  ScanConfig cfg;
  cfg.a = parse_range(o.a);
  cfg.b = parse_range(o.b);
  cfg.r = parse_range(o.r);
  cfg.t = parse_t_range(o.t);
  cfg.prime = o.prime;
  cfg.base_seed = o.seed;
  cfg.max_trials = o.trials;
  cfg.jobs = o.jobs;
  cfg.escalate = !o.no_escalate;
  cfg.timing = o.timing;
  ScanReport rep = run_scan(cfg);
  if (!o.json_path.empty()) write_text(o.json_path, report_json(rep));
  if (!o.csv_path.empty()) write_text(o.csv_path, report_csv(rep));
  std::cout << "scan: " << rep.cells.size() << " cells, " << rep.certified
            << " certified, " << rep.inconclusive << " inconclusive, " << rep.errors
            << " errors";
  if (cfg.timing) std::cout << ", wall " << rep.wall_ms << " ms";
  std::cout << "\n";
  return rep.all_certified() ? kExitOk : kExitInconclusive;
}

struct CohomologyArgs {
  int a = 0, b = 0, h = 0, k = 0;
  std::string curve = "random";
  std::uint64_t prime = 0, seed = 1;
  bool rationals = false, as_json = false;
};

template <class K>
int run_cohomology_on(const K& field, const CohomologyArgs& o) {
  BiForm<K> F = curve_by_name(field, o.curve, o.a, o.b, o.seed);
  RoutedCohomology rc = h0_h1_routed(F, o.h, o.k);
  long long d = line_bundle_degree(o.a, o.b, o.h, o.k);
  long long g = genus(o.a, o.b);
  if (o.as_json) {
    json j{{"a", o.a},          {"b", o.b},
           {"h", o.h},          {"k", o.k},
           {"curve", o.curve},  {"field", field_descriptor(field).to_string()},
           {"seed", o.seed},    {"route", rc.route},
           {"h0", rc.h0},       {"h1", rc.h1},
           {"degree", d},       {"genus", g},
           {"euler", rc.h0 - rc.h1},
           {"rows", rc.computed.rows},
           {"cols", rc.computed.cols},
           {"rank", rc.computed.rank}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "O_C(" << o.h << "," << o.k << ") on a " << o.curve << " (" << o.a << ","
              << o.b << ")-curve over " << field_descriptor(field).to_string() << ": h0="
              << rc.h0 << " h1=" << rc.h1 << " (degree " << d << ", genus " << g
              << ", route " << rc.route << ", matrix " << rc.computed.rows << "x"
              << rc.computed.cols << " rank " << rc.computed.rank << ")\n";
  }
  return kExitOk;
}

int run_cohomology(const CohomologyArgs& o) {
  if (o.rationals) return run_cohomology_on(RationalField(), o);
  return run_cohomology_on(PrimeField(o.prime), o);
}

struct ReduceArgs {
  int a = 0, b = 0, h = 0, k = 0;
  bool as_json = false;
};

int run_reduce(const ReduceArgs& o) {
  ReductionResult res = classify(o.a, o.b, o.h, o.k);
  if (o.as_json) {
    json j{{"kind", to_string(res.kind)},
           {"input", {{"a", res.input.a}, {"b", res.input.b}, {"h", res.input.h}, {"k", res.input.k}}},
           {"final", {{"a", res.final_state.a}, {"b", res.final_state.b}, {"h", res.final_state.h}, {"k", res.final_state.k}}},
           {"d", res.d},
           {"g", res.g}};
    j["chain"] = json::array();
    for (const auto& step : res.chain)
      j["chain"].push_back({{"step", to_string(step.kind)},
                            {"a", step.after.a},
                            {"b", step.after.b},
                            {"h", step.after.h},
                            {"k", step.after.k}});
    if (res.decomposition)
      j["decomposition"] = {{"alpha", res.decomposition->alpha},
                            {"m", res.decomposition->m},
                            {"beta", res.decomposition->beta},
                            {"n", res.decomposition->n}};
    if (res.side) j["side"] = to_string(*res.side);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classify " << res.input.to_string() << ": " << to_string(res.kind);
    if (res.side) std::cout << " (" << to_string(*res.side) << " side)";
    std::cout << "\n";
    for (const auto& step : res.chain)
      std::cout << "  " << to_string(step.kind) << " -> " << step.after.to_string() << "\n";
    if (res.decomposition) {
      const Decomposition& d = *res.decomposition;
      std::cout << "  final " << res.final_state.to_string() << ": alpha=" << d.alpha
                << " m=" << d.m << " beta=" << d.beta << " n=" << d.n << " (d=" << res.d
                << ", g=" << res.g << ")\n";
    }
  }
  return kExitOk;
}

struct GridCurveArgs {
  int a = 0, b = 0, m = 2;
  std::uint64_t prime = 0, seed = 1;
  bool rationals = false, as_json = false;
  std::string export_path;
};

template <class K>
int run_grid_curve_on(const K& field, const GridCurveArgs& o) {
  GridCurve<K> C = default_grid_curve(field, o.a, o.b, o.seed);
  SmoothnessCertificate sc = smoothness_certificate(C);
  TwistState tw = corner_twist(o.a, o.b, o.m);
  CohomologyResult res = h0_h1(C.F, tw.h, tw.k);
  if (!o.export_path.empty()) {
    MapMatrix<K> M = build_mulcon_matrix(C.F, tw.h - o.a, o.b - 2 - tw.k);
    std::ofstream os(o.export_path);
    if (!os) throw std::runtime_error("cannot open '" + o.export_path + "' for writing");
    export_matrix_market(M, os);
  }
  bool ok = sc.certified() && res.h0 == 0 && res.h1 == 0;
  if (o.as_json) {
    json j{{"a", o.a},
           {"b", o.b},
           {"m", o.m},
           {"field", field_descriptor(field).to_string()},
           {"seed", o.seed},
           {"h", tw.h},
           {"k", tw.k},
           {"h_poly", C.h.to_string("u")},
           {"smooth_certified", sc.certified()},
           {"h0", res.h0},
           {"h1", res.h1},
           {"rows", res.rows},
           {"cols", res.cols},
           {"rank", res.rank},
           {"verdict", ok ? "certified" : "inconclusive"}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "grid curve (" << o.a << "," << o.b << ") over "
              << field_descriptor(field).to_string() << ", h(u) = " << C.h.to_string("u")
              << "\n  smoothness certificate: " << (sc.certified() ? "certified" : "failed")
              << "\n  twist (" << tw.h << "," << tw.k << "): h0=" << res.h0
              << " h1=" << res.h1 << " (matrix " << res.rows << "x" << res.cols
              << ", rank " << res.rank << ")\n";
  }
  return ok ? kExitOk : kExitInconclusive;
}

int run_grid_curve(const GridCurveArgs& o) {
  if (o.rationals) return run_grid_curve_on(RationalField(), o);
  return run_grid_curve_on(PrimeField(o.prime), o);
}

struct VerifyZArgs {
  int a = 0, b = 0, alpha = 0, beta = 0;
  std::uint64_t prime = 0;
  bool rationals = false, as_json = false;
};

template <class K>
int run_verify_z_on(const K& field, const VerifyZArgs& o) {
  ZSubset<K> Z = construct_Z(field, o.a, o.b, o.alpha, o.beta);
  bool ok = verify_Z(Z);
  if (o.as_json) {
    json cells = json::array();
    for (const auto& [i, j] : Z.cells) cells.push_back({i, j});
    json j{{"a", o.a},
           {"b", o.b},
           {"alpha", o.alpha},
           {"beta", o.beta},
           {"alpha_hat", Z.alpha_hat},
           {"beta_hat", Z.beta_hat},
           {"case", to_string(Z.zcase)},
           {"grid_rows", Z.grid.rows()},
           {"grid_cols", Z.grid.cols()},
           {"size", Z.cells.size()},
           {"cells", cells},
           {"verified", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Z for (a,b)=(" << o.a << "," << o.b << "), (alpha,beta)=(" << o.alpha
              << "," << o.beta << "): case " << to_string(Z.zcase) << ", "
              << Z.cells.size() << " points in a " << Z.grid.rows() << "x"
              << Z.grid.cols() << " grid: " << (ok ? "verified" : "NOT verified") << "\n";
  }
  return ok ? kExitOk : kExitInconclusive;
}

int run_verify_z(const VerifyZArgs& o) {
  if (o.rationals) return run_verify_z_on(RationalField(), o);
  return run_verify_z_on(PrimeField(o.prime), o);
}

void add_prime_option(CLI::App* cmd, std::uint64_t* prime) {
  cmd->add_option("--prime", *prime,
                  "prime modulus (default: BIMULCON_PRIME or 65537)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact contraction ranks, cohomology and grid curves on P^1 x P^1"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CertifyArgs certify;
  CLI::App* c1 = app.add_subcommand("certify", "hunt a full-rank witness in one bidegree box");
  c1->add_option("-a,--a", certify.a, "x-degree of the form")->required();
  c1->add_option("-b,--b", certify.b, "y-degree of the form")->required();
  c1->add_option("-r,--r", certify.r, "symmetric power on the x side")->required();
  c1->add_option("-t,--t", certify.t, "symmetric power on the dual y side")->required();
  add_prime_option(c1, &certify.prime);
  c1->add_option("--seed", certify.seed, "base seed (trials use seed, seed+1, ...)");
  c1->add_option("--trials", certify.trials, "max random witnesses to try");
  c1->add_flag("--no-escalate", certify.no_escalate, "stay at the base prime");
  c1->add_flag("--json", certify.as_json, "machine-readable output");
  c1->add_option("--export-matrix", certify.export_path,
                 "write the witness matrix in MatrixMarket format");

  ScanArgs scan;
  CLI::App* c2 = app.add_subcommand("scan", "certify a whole box of bidegrees");
  c2->add_option("--a", scan.a, "a range LO:HI (default 2:4)");
  c2->add_option("--b", scan.b, "b range LO:HI (default 2:4)");
  c2->add_option("--r", scan.r, "r range LO:HI (default 0:4)");
  c2->add_option("--t", scan.t, "t range LO:HI or b+LO:b+HI (default b+0:b+4)");
  add_prime_option(c2, &scan.prime);
  c2->add_option("--seed", scan.seed, "base seed for the per-cell seeds");
  c2->add_option("--trials", scan.trials, "max random witnesses per cell");
  c2->add_option("--jobs", scan.jobs, "worker threads");
  c2->add_flag("--timing", scan.timing, "record wall-clock times (breaks reproducibility)");
  c2->add_flag("--no-escalate", scan.no_escalate, "stay at the base prime");
  c2->add_option("--json", scan.json_path, "write a JSON report to this path ('-' = stdout)");
  c2->add_option("--csv", scan.csv_path, "write a CSV report to this path ('-' = stdout)");

  CohomologyArgs coh;
  CLI::App* c3 = app.add_subcommand("cohomology", "h0/h1 of O_C(h,k) on an (a,b)-curve");
  c3->set_help_flag("--help", "print help");  // frees -h for the twist
  c3->add_option("-a,--a", coh.a, "curve x-degree")->required();
  c3->add_option("-b,--b", coh.b, "curve y-degree")->required();
  c3->add_option("-h,--h", coh.h, "twist in the first ruling")->required();
  c3->add_option("-k,--k", coh.k, "twist in the second ruling")->required();
  c3->add_option("--curve", coh.curve, "random | grid | line-degenerate");
  c3->add_option("--seed", coh.seed, "seed for the curve coefficients");
  add_prime_option(c3, &coh.prime);
  c3->add_flag("--rationals", coh.rationals, "work over Q instead of F_p");
  c3->add_flag("--json", coh.as_json, "machine-readable output");

  ReduceArgs red;
  CLI::App* c4 = app.add_subcommand("reduce", "route a twist to its critical shape");
  c4->set_help_flag("--help", "print help");  // frees -h for the twist
  c4->add_option("-a,--a", red.a, "curve x-degree")->required();
  c4->add_option("-b,--b", red.b, "curve y-degree")->required();
  c4->add_option("-h,--h", red.h, "twist in the first ruling")->required();
  c4->add_option("-k,--k", red.k, "twist in the second ruling")->required();
  c4->add_flag("--json", red.as_json, "machine-readable output");

  GridCurveArgs gc;
  CLI::App* c5 = app.add_subcommand("grid-curve",
                                    "build a certified grid curve and test its corner twist");
  c5->add_option("-a,--a", gc.a, "curve x-degree")->required();
  c5->add_option("-b,--b", gc.b, "curve y-degree")->required();
  c5->add_option("-m,--m", gc.m, "corner multiplicity (h,k) = (ma-1, b-1-mb)");
  c5->add_option("--seed", gc.seed, "seed for the h coefficients");
  add_prime_option(c5, &gc.prime);
  c5->add_flag("--rationals", gc.rationals, "work over Q instead of F_p");
  c5->add_flag("--json", gc.as_json, "machine-readable output");
  c5->add_option("--export-matrix", gc.export_path,
                 "write the corner-twist matrix in MatrixMarket format");

  VerifyZArgs vz;
  CLI::App* c6 = app.add_subcommand("verify-z", "construct and check a Z configuration");
  c6->add_option("-a,--a", vz.a, "curve x-degree")->required();
  c6->add_option("-b,--b", vz.b, "curve y-degree")->required();
  c6->add_option("--alpha", vz.alpha, "first target degree, in [-1, a-2]")->required();
  c6->add_option("--beta", vz.beta, "second target degree, in [-1, b-2]")->required();
  add_prime_option(c6, &vz.prime);
  c6->add_flag("--rationals", vz.rationals, "work over Q instead of F_p");
  c6->add_flag("--json", vz.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::uint64_t envp = env_default_prime();
    if (certify.prime == 0) certify.prime = envp;
    if (scan.prime == 0) scan.prime = envp;
    if (coh.prime == 0) coh.prime = envp;
    if (gc.prime == 0) gc.prime = envp;
    if (vz.prime == 0) vz.prime = envp;
    if (app.got_subcommand(c1)) return run_certify(certify);
    if (app.got_subcommand(c2)) return run_scan_cmd(scan);
    if (app.got_subcommand(c3)) return run_cohomology(coh);
    if (app.got_subcommand(c4)) return run_reduce(red);
    if (app.got_subcommand(c5)) return run_grid_curve(gc);
    if (app.got_subcommand(c6)) return run_verify_z(vz);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
