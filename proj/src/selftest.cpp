// Copyright 2026 The hardyops authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardyops/selftest.hpp"

#include "hardyops/classify.hpp"
#include "hardyops/fast_apply.hpp"
#include "hardyops/json_io.hpp"
#include "hardyops/modelspace.hpp"
#include "hardyops/random_symbols.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace hardyops {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Max coefficient distance of two symbols over their union window.
double symbol_distance(const TrigPoly& a, const TrigPoly& b) {
  double worst = 0.0;
  for (int n = std::min(a.lo(), b.lo()); n <= std::max(a.hi(), b.hi()); ++n)
    worst = std::max(worst, (a.coeff(n) - b.coeff(n)).cwiseAbs().maxCoeff());
  return worst;
}

void run_group(SelftestReport& rep, const std::string& name,
               const std::function<void(SelftestGroup&)>& body) {
  SelftestGroup g;
  g.name = name;
  g.pass = true;
  try {
    body(g);
  } catch (const std::exception& e) {
    g.pass = false;
    g.detail = e.what();
  }
  rep.groups.push_back(std::move(g));
}

void check(SelftestGroup& g, bool ok, const std::string& what) {
  if (!ok && g.pass) {
    g.pass = false;
    g.detail = what;
  }
}

void track(SelftestGroup& g, double residual, double threshold, const std::string& what) {
  g.worst = std::max(g.worst, residual);
  check(g, residual <= threshold, what);
}

}  // namespace

SelftestReport selftest(std::uint64_t seed, bool inject_fault) {
  SelftestReport rep;
  rep.seed = seed;

  run_group(rep, "trigpoly_algebra", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x01);
    for (int trial = 0; trial < 25; ++trial) {
      const TrigPoly a = rng.symbol_window(5);
      const TrigPoly b = rng.symbol_window(4);
      track(g, symbol_distance(conj_bar(conj_bar(a)), a), 0.0, "conj_bar involution");
      track(g, symbol_distance(multiply(conj_bar(a), conj_bar(b)),
                               conj_bar(multiply(b, a))),
            1e-14, "bar reverses products");
      const auto [plus, minus] = split_plus_minus(a);
      track(g, symbol_distance(plus + minus, a), 0.0, "split components sum back");
      const Complex t(std::cos(0.7), std::sin(0.7));
      const Complex lhs = evaluate(multiply(a, b), t)(0, 0);
      const Complex rhs = evaluate(a, t)(0, 0) * evaluate(b, t)(0, 0);
      track(g, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 1e-12,
            "evaluate is multiplicative");
    }
  });

  run_group(rep, "tph_construction", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x02);
    const int n = 32;
    for (int trial = 0; trial < 25; ++trial) {
      const TrigPoly phi = rng.symbol_window(6);
      const TrigPoly psi = rng.symbol_window(6);
      OperatorMatrix a = toeplitz_plus_hankel(phi, psi, n);
      if (inject_fault && trial == 0) {
        Eigen::MatrixXcd d = a.data();
        d(4, 5) += 1e-3;
        a = OperatorMatrix::h2(std::move(d), n, 1);
      }
      const ClassReport r = test_tph(a, 1e-12);
      track(g, r.residual, 1e-12, "cross rule on constructed sections");
      check(g, r.details.at("verdict_agreement") == 1.0, "criteria verdicts agree");

      // Guarded shift identities on the pieces themselves.
      const int guard = 6;
      const Eigen::MatrixXcd t = toeplitz_matrix(phi, n).data();
      double bh = 0.0;
      for (int j = 0; j + guard < n - 1; ++j)
        for (int k = 0; k + guard < n - 1; ++k)
          bh = std::max(bh, std::abs(t(j + 1, k + 1) - t(j, k)));
      track(g, bh, 1e-12, "shift compression fixes Toeplitz sections");

      const Eigen::MatrixXcd h = hankel_matrix(psi, n).data();
      double intertwine = 0.0;
      for (int j = 0; j + guard < n - 1; ++j)
        for (int k = 0; k + guard < n - 1; ++k)
          intertwine = std::max(intertwine, std::abs(h(j + 1, k) - h(j, k + 1)));
      track(g, intertwine, 1e-12, "Hankel sections intertwine the shift");
    }
  });

  run_group(rep, "tph_decomposition", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x03);
    const int n = 32;
    const Eigen::MatrixXd gauge = tph_gauge_basis(n);
    for (int trial = 0; trial < 15; ++trial) {
      const SymbolPair truth(rng.symbol_window(6), rng.analytic_symbol(12));
      const OperatorMatrix a = toeplitz_plus_hankel(truth.phi, truth.psi, n);
      const ClassReport r = decompose_tph(a, 1e-10);
      check(g, r.verdict, "decompose verdict");
      track(g, r.residual, 1e-10, "reconstruction residual");
      if (!r.recovered) continue;
      const Eigen::MatrixXcd diff =
          stack_tph_coefficients(*r.recovered, n) - stack_tph_coefficients(truth, n);
      const Eigen::MatrixXcd off =
          diff - gauge.cast<Complex>() * (gauge.cast<Complex>().adjoint() * diff);
      track(g, max_abs(off), 1e-10, "difference stays on the gauge plane");
    }
  });

  run_group(rep, "block_case", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x04);
    const int n = 16;
    for (int trial = 0; trial < 10; ++trial) {
      const SymbolPair truth(rng.symbol_window(4, 2), rng.analytic_symbol(8, 2));
      const OperatorMatrix a = toeplitz_plus_hankel(truth.phi, truth.psi, n);
      const ClassReport cross = test_tph(a, 1e-11);
      track(g, cross.residual, 1e-11, "block cross rule");
      const ClassReport dec = decompose_tph(a, 1e-9);
      check(g, dec.verdict, "block decomposition verdict");
      track(g, dec.residual, 1e-9, "block reconstruction residual");
    }
  });

  run_group(rep, "paired_operators", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x05);
    const int m = 24;
    for (int trial = 0; trial < 25; ++trial) {
      const SymbolPair pair(rng.symbol_window(6), rng.symbol_window(6));
      const OperatorMatrix s = paired_matrix(pair, m);
      const ClassReport r = test_paired(s, 1e-12);
      track(g, r.residual, 1e-12, "paired diagonal constancy");
      check(g, r.recovered.has_value(), "paired recovery present");
      if (r.recovered) {
        track(g, symbol_distance(r.recovered->phi, pair.phi), 1e-12, "phi recovery");
        track(g, symbol_distance(r.recovered->psi, pair.psi), 1e-12, "psi recovery");
      }
      const OperatorMatrix dual =
          transposed_paired_matrix(SymbolPair(conj_bar(pair.phi), conj_bar(pair.psi)), m);
      track(g, max_abs(s.adjoint().data() - dual.data()), 0.0, "adjoint duality is exact");

      const ClassReport rt = test_transposed_paired(dual, 1e-12);
      track(g, rt.residual, 1e-12, "transposed paired constancy");
      if (rt.recovered) {
        track(g, symbol_distance(rt.recovered->phi, conj_bar(pair.phi)), 1e-12,
              "transposed phi recovery");
        track(g, symbol_distance(rt.recovered->psi, conj_bar(pair.psi)), 1e-12,
              "transposed psi recovery");
      }
    }
  });

  run_group(rep, "noninjective_pipeline", [&](SelftestGroup& g) {
    const int n = 16;
    for (int a_deg = 1; a_deg <= 3; ++a_deg)
      for (int b_deg = 0; b_deg <= 2; ++b_deg) {
        const TrigPoly phi = TrigPoly::monomial(a_deg);
        const TrigPoly psi = TrigPoly::monomial(b_deg);
        const OperatorMatrix a = toeplitz_plus_hankel(phi, psi, n);
        const ClassReport r = noninjective_pipeline(a, 1e-10);
        check(g, r.verdict, "pipeline verdict on monomial data");
        track(g, r.residual, 1e-10, "pipeline residuals");
        if (!r.verdict) continue;
        const TrigPoly expected_theta = TrigPoly::monomial(b_deg + 1);
        track(g, symbol_distance(r.recovered_extra.at("theta"), expected_theta), 0.0,
              "theta is the expected monomial");
        track(g, symbol_distance(r.recovered->phi, phi), 1e-10, "phi recovery");
        track(g, symbol_distance(r.recovered->psi, psi), 1e-10, "psi recovery");
      }
  });

  run_group(rep, "modelspace", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x06);
    const int n = 64;
    std::vector<TrigPoly> thetas;
    for (int k = 1; k <= 3; ++k) thetas.push_back(TrigPoly::monomial(k));
    {
      BlaschkeSpec one;
      one.zeros = {Complex(0.5, 0.0)};
      thetas.push_back(blaschke_coeffs(one, n).theta);
      BlaschkeSpec two;
      two.zeros = {Complex(0.5, 0.0), Complex(-0.3, 0.4)};
      thetas.push_back(blaschke_coeffs(two, n).theta);
    }
    int deg_truth[] = {1, 2, 3, 1, 2};
    int idx = 0;
    for (const TrigPoly& theta : thetas) {
      const ModelProjections proj = model_projection(theta, n);
      const Eigen::MatrixXcd& pk = proj.p_model.data();
      track(g, std::abs(pk.trace().real() - deg_truth[idx]) + std::abs(pk.trace().imag()),
            1e-6, "projection trace equals deg(theta)");
      track(g, max_abs(pk * pk - pk), 1e-10, "projection idempotency");
      track(g, max_abs(pk + proj.p_theta_h2.data() -
                       Eigen::MatrixXcd::Identity(n, n)),
            0.0, "projections sum to the identity");

      const TrigPoly phi = rng.analytic_symbol(5);
      const TrigPoly psi = rng.analytic_symbol(5);
      const OperatorMatrix x = theta_paired_matrix(ThetaPairedSpec(theta, phi, psi), n);
      const ClassReport r = test_theta_paired(x, theta, idx < 3 ? 1e-10 : 1e-6);
      check(g, r.verdict, "theta-paired verdict on constructed sections");
      if (r.recovered) {
        const double tol_here = idx < 3 ? 1e-10 : 1e-6;
        track(g, symbol_distance(r.recovered->phi, phi), tol_here, "theta-paired phi");
        track(g, symbol_distance(r.recovered->psi, psi), tol_here, "theta-paired psi");
      }
      ++idx;
    }

    // Classical truncation: theta = z^m compresses to the m x m section.
    const TrigPoly phi = rng.symbol_window(3);
    const OperatorMatrix tt = truncated_toeplitz(phi, TrigPoly::monomial(8), 16);
    track(g, max_abs(tt.data() - toeplitz_matrix(phi, 8).data()), 0.0,
          "monomial theta reproduces the classical truncation");
  });

  run_group(rep, "fast_apply", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x07);
    for (int n : {64, 256, 1024}) {
      const SymbolPair pair(rng.symbol_window(8), rng.analytic_symbol(10));
      const Eigen::VectorXcd x = rng.vector(n);
      const Eigen::VectorXcd dense = toeplitz_plus_hankel(pair.phi, pair.psi, n).data() * x;
      const FastApplyResult fast = fast_apply_tph(pair, x);
      check(g, fast.used_fft, "scalar inputs take the FFT path");
      track(g, (fast.y - dense).cwiseAbs().maxCoeff() / std::max(1.0, max_abs(dense)),
            1e-10, "fast path agrees with the dense section");
    }
  });

  run_group(rep, "negative_controls", [&](SelftestGroup& g) {
    SymbolRng rng(seed ^ 0x08);
    double min_residual = 1e300;
    for (int trial = 0; trial < 25; ++trial) {
      const OperatorMatrix a = OperatorMatrix::h2(rng.dense_matrix(16, 16), 16, 1);
      const OperatorMatrix x = OperatorMatrix::l2(rng.dense_matrix(17, 17), 8, 1);
      for (const ClassReport& r :
           {test_toeplitz(a, 1e-9), test_hankel(a, 1e-9), test_tph(a, 1e-9),
            test_paired(x, 1e-9), test_transposed_paired(x, 1e-9),
            test_theta_paired(a, TrigPoly::monomial(2), 1e-9)}) {
        check(g, !r.verdict, "structureless input must be rejected");
        min_residual = std::min(min_residual, r.residual);
      }
    }
    g.worst = min_residual;
    check(g, min_residual >= 1e-2, "rejection margin of structureless inputs");
  });

  rep.all_pass = true;
  for (const SelftestGroup& g : rep.groups) rep.all_pass = rep.all_pass && g.pass;
  return rep;
}

std::string selftest_report_to_json_string(const SelftestReport& r) {
  nlohmann::json j;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass;
  nlohmann::json groups = nlohmann::json::array();
  for (const SelftestGroup& g : r.groups) {
    nlohmann::json jg;
    jg["name"] = g.name;
    jg["pass"] = g.pass;
    jg["worst_residual"] = g.worst;
    if (!g.detail.empty()) jg["detail"] = g.detail;
    groups.push_back(std::move(jg));
  }
  j["groups"] = std::move(groups);
  return j.dump(2);
}

}  // namespace hardyops
