#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bimulcon/cohomology.hpp"
#include "bimulcon/grid.hpp"
#include "bimulcon/gridcurve.hpp"
#include "bimulcon/rank.hpp"
#include "bimulcon/reduction.hpp"
#include "bimulcon/survey.hpp"

namespace py = pybind11;
using namespace bimulcon;
using namespace pybind11::literals;

namespace {

py::dict certificate_dict(const Certificate& c, bool escalated) {
  return py::dict("a"_a = c.a, "b"_a = c.b, "r"_a = c.r, "t"_a = c.t,
                  "field"_a = c.field.to_string(), "rows"_a = c.rows, "cols"_a = c.cols,
                  "target"_a = c.target_rank, "rank"_a = c.achieved_rank,
                  "trials"_a = c.trials, "base_seed"_a = c.base_seed,
                  "witness_seed"_a = c.witness_seed, "escalated"_a = escalated,
                  "certified"_a = c.certified());
}

template <class K>
py::dict cohomology_dict(const K& field, const std::string& curve, int a, int b, int h,
                         int k, std::uint64_t seed) {
  BiForm<K> F = curve_by_name(field, curve, a, b, seed);
  RoutedCohomology rc = h0_h1_routed(F, h, k);
  return py::dict("a"_a = a, "b"_a = b, "h"_a = h, "k"_a = k, "curve"_a = curve,
                  "field"_a = field_descriptor(field).to_string(), "seed"_a = seed,
                  "route"_a = rc.route, "h0"_a = rc.h0, "h1"_a = rc.h1,
                  "degree"_a = line_bundle_degree(a, b, h, k), "genus"_a = genus(a, b),
                  "rows"_a = rc.computed.rows, "cols"_a = rc.computed.cols,
                  "rank"_a = rc.computed.rank);
}

template <class K>
py::dict grid_curve_dict(const K& field, int a, int b, int m, std::uint64_t seed) {
  GridCurve<K> C = default_grid_curve(field, a, b, seed);
  SmoothnessCertificate sc = smoothness_certificate(C);
  TwistState tw = corner_twist(a, b, m);
  CohomologyResult res = h0_h1(C.F, tw.h, tw.k);
  return py::dict("a"_a = a, "b"_a = b, "m"_a = m,
                  "field"_a = field_descriptor(field).to_string(), "seed"_a = seed,
                  "h"_a = tw.h, "k"_a = tw.k, "h_poly"_a = C.h.to_string("u"),
                  "smooth_certified"_a = sc.certified(), "h0"_a = res.h0,
                  "h1"_a = res.h1, "rows"_a = res.rows, "cols"_a = res.cols,
                  "rank"_a = res.rank,
                  "certified"_a = (sc.certified() && res.h0 == 0 && res.h1 == 0));
}

template <class K>
py::dict z_dict(const K& field, int a, int b, int alpha, int beta) {
  ZSubset<K> Z = construct_Z(field, a, b, alpha, beta);
  return py::dict("a"_a = a, "b"_a = b, "alpha"_a = alpha, "beta"_a = beta,
                  "alpha_hat"_a = Z.alpha_hat, "beta_hat"_a = Z.beta_hat,
                  "case"_a = to_string(Z.zcase), "grid_rows"_a = Z.grid.rows(),
                  "grid_cols"_a = Z.grid.cols(), "cells"_a = Z.cells,
                  "verified"_a = verify_Z(Z));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact contraction ranks, cohomology and grid curves on P^1 x P^1";
  m.attr("__version__") = kVersion;
  m.attr("DEFAULT_PRIME") = py::int_(kDefaultPrime);
  m.attr("ESCALATION_PRIME") = py::int_(kEscalationPrime);

  py::class_<MapMatrix<PrimeField>>(m, "Matrix",
                                    "sparse exact matrix over a prime field")
      .def_property_readonly("rows", &MapMatrix<PrimeField>::rows)
      .def_property_readonly("cols", &MapMatrix<PrimeField>::cols)
      .def_property_readonly("nnz", &MapMatrix<PrimeField>::nnz)
      .def_property_readonly(
          "modulus", [](const MapMatrix<PrimeField>& M) { return M.field().modulus(); })
      .def("rank", [](const MapMatrix<PrimeField>& M) { return matrix_rank(M); })
      .def("kernel_dim",
           [](const MapMatrix<PrimeField>& M) { return rank_profile(M).kernel_dim; })
      .def("cokernel_dim",
           [](const MapMatrix<PrimeField>& M) { return rank_profile(M).cokernel_dim; })
      .def("transpose", &MapMatrix<PrimeField>::transpose)
      .def("triplets",
           [](const MapMatrix<PrimeField>& M) {
             std::vector<std::tuple<long long, long long, std::uint64_t>> out;
             out.reserve(static_cast<std::size_t>(M.nnz()));
             for (const auto& e : M.entries()) out.emplace_back(e.row, e.col, e.value);
             return out;
           })
      .def("matrix_market",
           [](const MapMatrix<PrimeField>& M) { return matrix_market_string(M); });

  m.def("dimension", &dimension, "m"_a, "n"_a, "r"_a, "t"_a,
        "dim S^r(C^{m+1}) (x) S^t(C^{n+1})");
  m.def("genus", &genus, "a"_a, "b"_a);
  m.def("line_bundle_degree", &line_bundle_degree, "a"_a, "b"_a, "h"_a, "k"_a);

  m.def(
      "mulcon_matrix",
      [](int a, int b, int r, int t, std::uint64_t seed, std::uint64_t prime) {
        PrimeField f(prime);
        return build_mulcon_matrix(random_biform(a, b, f, seed), r, t);
      },
      "a"_a, "b"_a, "r"_a, "t"_a, "seed"_a = 1, "prime"_a = kDefaultPrime,
      "contraction matrix of a seeded random form");
  m.def(
      "diff_matrix",
      [](int a, int b, int r, int t, std::uint64_t seed, std::uint64_t prime) {
        PrimeField f(prime);
        return build_diff_matrix(random_biform(a, b, f, seed), r, t);
      },
      "a"_a, "b"_a, "r"_a, "t"_a, "seed"_a = 1, "prime"_a = kDefaultPrime,
      "differential-operator matrix of a seeded random form");

  m.def(
      "certify",
      [](int a, int b, int r, int t, std::uint64_t seed, int trials, std::uint64_t prime,
         bool escalate) {
        if (escalate) {
          EscalationResult esc = certify_with_escalation(prime, a, b, r, t, seed, trials);
          return certificate_dict(esc.outcome(), esc.escalated.has_value());
        }
        return certificate_dict(
            generic_rank_certificate(PrimeField(prime), a, b, r, t, seed, trials), false);
      },
      "a"_a, "b"_a, "r"_a, "t"_a, "seed"_a = 1, "trials"_a = 3,
      "prime"_a = kDefaultPrime, "escalate"_a = true,
      "hunt a full-rank witness for the generic contraction rank");

  m.def(
      "h0_h1",
      [](int a, int b, int h, int k, const std::string& curve, std::uint64_t seed,
         std::uint64_t prime, bool rationals) {
        if (rationals) return cohomology_dict(RationalField(), curve, a, b, h, k, seed);
        return cohomology_dict(PrimeField(prime), curve, a, b, h, k, seed);
      },
      "a"_a, "b"_a, "h"_a, "k"_a, "curve"_a = "random", "seed"_a = 1,
      "prime"_a = kDefaultPrime, "rationals"_a = false,
      "h0/h1 of O_C(h,k) on an (a,b)-curve");

  m.def(
      "classify",
      [](int a, int b, int h, int k) {
        ReductionResult res = classify(a, b, h, k);
        py::dict out("kind"_a = to_string(res.kind), "d"_a = res.d, "g"_a = res.g,
                     "input"_a = py::make_tuple(res.input.a, res.input.b, res.input.h,
                                                res.input.k),
                     "final"_a = py::make_tuple(res.final_state.a, res.final_state.b,
                                                res.final_state.h, res.final_state.k));
        py::list chain;
        for (const auto& step : res.chain)
          chain.append(py::make_tuple(to_string(step.kind), step.after.a, step.after.b,
                                      step.after.h, step.after.k));
        out["chain"] = chain;
        if (res.decomposition)
          out["decomposition"] =
              py::dict("alpha"_a = res.decomposition->alpha, "m"_a = res.decomposition->m,
                       "beta"_a = res.decomposition->beta, "n"_a = res.decomposition->n);
        if (res.side) out["side"] = to_string(*res.side);
        return out;
      },
      "a"_a, "b"_a, "h"_a, "k"_a, "route a twist to its critical shape");

  m.def(
      "critical_band",
      [](int a, int b) {
        CriticalBand bd = critical_band(a, b);
        return py::make_tuple(bd.lo, bd.hi);
      },
      "a"_a, "b"_a, "(lo, hi] degree band of the critical twists");
  m.def(
      "decompose",
      [](int a, int b, int h, int k) {
        Decomposition d = decompose(a, b, h, k);
        return py::make_tuple(d.alpha, d.m, d.beta, d.n);
      },
      "a"_a, "b"_a, "h"_a, "k"_a, "(alpha, m, beta, n) with h=ma+alpha, k=beta-nb");
  m.def(
      "recompose",
      [](int a, int b, int alpha, int mm, int beta, int n) {
        TwistState s = recompose(a, b, Decomposition{alpha, mm, beta, n});
        return py::make_tuple(s.h, s.k);
      },
      "a"_a, "b"_a, "alpha"_a, "m"_a, "beta"_a, "n"_a);

  auto state_tuple = [](const TwistState& s) {
    return py::make_tuple(s.a, s.b, s.h, s.k);
  };
  m.def(
      "serre_dual",
      [state_tuple](int a, int b, int h, int k) {
        return state_tuple(serre_dual(TwistState{a, b, h, k}));
      },
      "a"_a, "b"_a, "h"_a, "k"_a);
  m.def(
      "swap_rulings",
      [state_tuple](int a, int b, int h, int k) {
        return state_tuple(swap_rulings(TwistState{a, b, h, k}));
      },
      "a"_a, "b"_a, "h"_a, "k"_a);
  m.def(
      "serre_dual_swapped",
      [state_tuple](int a, int b, int h, int k) {
        return state_tuple(serre_dual_swapped(TwistState{a, b, h, k}));
      },
      "a"_a, "b"_a, "h"_a, "k"_a);

  m.def(
      "bipartite_graph",
      [](int rows, int cols, long long n_edges) {
        return bipartite_graph(rows, cols, n_edges).edges;
      },
      "rows"_a, "cols"_a, "n_edges"_a, "balanced duplicate-free edge list");

  m.def(
      "construct_z",
      [](int a, int b, int alpha, int beta, std::uint64_t prime, bool rationals) {
        if (rationals) return z_dict(RationalField(), a, b, alpha, beta);
        return z_dict(PrimeField(prime), a, b, alpha, beta);
      },
      "a"_a, "b"_a, "alpha"_a, "beta"_a, "prime"_a = kDefaultPrime,
      "rationals"_a = false, "build and verify a Z configuration");

  m.def(
      "grid_curve",
      [](int a, int b, int mm, std::uint64_t seed, std::uint64_t prime, bool rationals) {
        if (rationals) return grid_curve_dict(RationalField(), a, b, mm, seed);
        return grid_curve_dict(PrimeField(prime), a, b, mm, seed);
      },
      "a"_a, "b"_a, "m"_a = 2, "seed"_a = 1, "prime"_a = kDefaultPrime,
      "rationals"_a = false,
      "certified grid curve and its corner-twist cohomology");

  m.def(
      "run_scan",
      [](const std::string& a, const std::string& b, const std::string& r,
         const std::string& t, std::uint64_t prime, std::uint64_t seed, int trials,
         int jobs, bool escalate, bool timing) {
        ScanConfig cfg;
        cfg.a = parse_range(a);
        cfg.b = parse_range(b);
        cfg.r = parse_range(r);
        cfg.t = parse_t_range(t);
        cfg.prime = prime;
        cfg.base_seed = seed;
        cfg.max_trials = trials;
        cfg.jobs = jobs;
        cfg.escalate = escalate;
        cfg.timing = timing;
        return report_json(run_scan(cfg));
      },
      "a"_a = "2:4", "b"_a = "2:4", "r"_a = "0:4", "t"_a = "b+0:b+4",
      "prime"_a = kDefaultPrime, "seed"_a = 1, "trials"_a = 3, "jobs"_a = 1,
      "escalate"_a = true, "timing"_a = false,
      "certify a box of bidegrees; returns the JSON report");

  m.def("stable_cell_seed", &stable_cell_seed, "base"_a, "a"_a, "b"_a, "r"_a, "t"_a);
}
