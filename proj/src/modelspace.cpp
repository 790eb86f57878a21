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

#include "hardyops/modelspace.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace hardyops {

namespace {

constexpr const char* kModelBasisConvention = "modelbasis-v1";

void require_scalar_h2(const OperatorMatrix& a, const char* who) {
  if (a.basis() != BasisKind::H2Window)
    throw Error(ErrorCode::BasisMismatch, std::string(who) + " expects an H2 window section");
  if (a.block_dim() != 1)
    throw Error(ErrorCode::NotApplicable,
                std::string(who) + " is a scalar construction");
}

void require_analytic_scalar(const TrigPoly& p, const char* what) {
  if (p.block_dim() != 1)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be scalar");
  if (!p.is_analytic())
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be analytic (no negative Fourier indices)");
}

int theta_degree(const TrigPoly& theta) {
  require_analytic_scalar(theta, "theta");
  if (theta.is_zero())
    throw Error(ErrorCode::InvalidArgument, "theta must be nonzero");
  return theta.hi();
}

void require_nonconstant_theta(const TrigPoly& theta, const char* who) {
  if (theta_degree(theta) < 1)
    throw Error(ErrorCode::NotApplicable,
                std::string(who) + ": constant inner function has a trivial model "
                                   "space; the classification degenerates");
}

// Largest index whose coefficient is above cut * max; the hard degree for
// polynomial inner functions, a decay-derived band for Blaschke truncations.
int effective_degree(const TrigPoly& theta, double cut) {
  const double top = max_coeff_abs(theta);
  int eff = 0;
  for (int k = theta.lo(); k <= theta.hi(); ++k)
    if (std::abs(theta.scalar_coeff(k)) > cut * top) eff = k;
  return eff;
}

Eigen::VectorXcd theta_vector(const TrigPoly& theta, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (int k = 0; k <= std::min(theta.hi(), n - 1); ++k) v(k) = theta.scalar_coeff(k);
  return v;
}

TrigPoly vector_to_poly(const Eigen::VectorXcd& v) {
  std::vector<Complex> coeffs(v.data(), v.data() + v.size());
  return TrigPoly::scalar(0, coeffs);
}

}  // namespace

void BlaschkeSpec::validate() const {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw Error(ErrorCode::InvalidArgument, "r_max must lie in (0, 1)");
  for (const Complex& a : zeros)
    if (std::abs(a) > r_max)
      throw Error(ErrorCode::InvalidArgument,
                  "Blaschke zero exceeds r_max; zeros this close to the circle need "
                  "an explicitly larger window");
  if (std::abs(std::abs(unimodular_const) - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "the Blaschke constant must be unimodular");
}

BlaschkeCoeffs blaschke_coeffs(const BlaschkeSpec& spec, int n) {
  spec.validate();
  if (n < spec.degree() + 1)
    throw Error(ErrorCode::InvalidArgument, "window must exceed the Blaschke degree");

  std::vector<Complex> c(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  c[0] = spec.unimodular_const;
  std::vector<Complex> num(static_cast<std::size_t>(n));
  for (const Complex& a : spec.zeros) {
    // multiply by (z - a), then divide by (1 - conj(a) z) term by term
    for (int k = n - 1; k >= 0; --k)
      num[static_cast<std::size_t>(k)] =
          (k > 0 ? c[static_cast<std::size_t>(k - 1)] : Complex(0.0, 0.0)) -
          a * c[static_cast<std::size_t>(k)];
    const Complex abar = std::conj(a);
    Complex prev(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      prev = num[static_cast<std::size_t>(k)] + abar * prev;
      c[static_cast<std::size_t>(k)] = prev;
    }
  }

  double energy = 0.0;
  for (const Complex& v : c) energy += std::norm(v);
  BlaschkeCoeffs out{TrigPoly::scalar(0, c), std::abs(1.0 - energy)};
  return out;
}

ModelProjections model_projection(const TrigPoly& theta, int n) {
  const int deg = theta_degree(theta);
  if (n < deg + 1)
    throw Error(ErrorCode::InvalidArgument, "window must exceed deg(theta)");
  const Eigen::MatrixXcd t = toeplitz_matrix(theta, n).data();
  // T_theta is lower triangular, so the section product T T^* is the exact
  // section of the infinite projection onto theta H^2.
  Eigen::MatrixXcd p_theta = t * t.adjoint();
  Eigen::MatrixXcd p_model = Eigen::MatrixXcd::Identity(n, n) - p_theta;
  return {OperatorMatrix::h2(std::move(p_model), n, 1),
          OperatorMatrix::h2(std::move(p_theta), n, 1)};
}

Eigen::MatrixXcd model_basis(const OperatorMatrix& p_model, int expected_dim) {
  require_scalar_h2(p_model, "model_basis");
  const int n = p_model.modes();
  const Eigen::MatrixXcd& p = p_model.data();

  // Exact 0/1 diagonal projections (monomial theta) take the bit-exact path:
  // the coordinate vectors already satisfy the ordering and phase rules.
  bool exact_diag = true;
  for (int j = 0; j < n && exact_diag; ++j)
    for (int k = 0; k < n && exact_diag; ++k) {
      if (j == k) {
        if (p(j, j) != Complex(0.0, 0.0) && p(j, j) != Complex(1.0, 0.0))
          exact_diag = false;
      } else if (p(j, k) != Complex(0.0, 0.0)) {
        exact_diag = false;
      }
    }
  if (exact_diag) {
    std::vector<int> ones;
    for (int j = 0; j < n; ++j)
      if (p(j, j) == Complex(1.0, 0.0)) ones.push_back(j);
    const int rank = static_cast<int>(ones.size());
    if (expected_dim >= 0 && rank != expected_dim)
      throw Error(ErrorCode::NotApplicable,
                  "model space numerical rank does not match deg(theta); raise N");
    if (rank < 1) throw Error(ErrorCode::NotApplicable, "model space is trivial");
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, rank);
    for (int i = 0; i < rank; ++i) q(ones[static_cast<std::size_t>(i)], i) = 1.0;
    return q;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::Internal, "eigendecomposition of the model projection failed");

  struct Entry {
    int anchor;
    int order;
    Eigen::VectorXcd vec;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < n; ++i) {
    const double lambda = es.eigenvalues()(i);
    // A usable projection has its spectrum pinned near {0, 1}.
    if (std::min(std::abs(lambda), std::abs(lambda - 1.0)) > 0.1)
      throw Error(ErrorCode::NotApplicable,
                  "numerical range of the model projection is ambiguous; raise N");
    if (lambda <= 0.5) continue;
    Eigen::VectorXcd v = es.eigenvectors().col(i);
    int anchor = 0;
    double best = -1.0;
    for (int j = 0; j < n; ++j)
      if (std::abs(v(j)) > best) {
        best = std::abs(v(j));
        anchor = j;
      }
    v *= std::conj(v(anchor)) / std::abs(v(anchor));  // anchor real positive
    entries.push_back({anchor, i, std::move(v)});
  }
  const int rank = static_cast<int>(entries.size());
  if (expected_dim >= 0 && rank != expected_dim)
    throw Error(ErrorCode::NotApplicable,
                "model space numerical rank does not match deg(theta); raise N");
  if (rank < 1) throw Error(ErrorCode::NotApplicable, "model space is trivial");
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.anchor != b.anchor ? a.anchor < b.anchor : a.order < b.order;
  });

  Eigen::MatrixXcd q(n, rank);
  for (int i = 0; i < rank; ++i) q.col(i) = entries[static_cast<std::size_t>(i)].vec;
  return q;
}

OperatorMatrix truncated_toeplitz(const TrigPoly& phi, const TrigPoly& theta, int n) {
  if (phi.block_dim() != 1)
    throw Error(ErrorCode::InvalidArgument, "truncated_toeplitz is scalar");
  require_nonconstant_theta(theta, "truncated_toeplitz");
  const ModelProjections proj = model_projection(theta, n);
  // The dimension is read off the projection's spectrum; a polynomial theta
  // of exact degree t pins it to t, a Blaschke truncation to its zero count.
  const Eigen::MatrixXcd q = model_basis(proj.p_model, -1);
  Eigen::MatrixXcd a = q.adjoint() * toeplitz_matrix(phi, n).data() * q;
  const int dim = static_cast<int>(q.cols());
  return OperatorMatrix::model(std::move(a), dim, kModelBasisConvention);
}

ThetaPairedSpec::ThetaPairedSpec(TrigPoly theta_in, TrigPoly phi_in, TrigPoly psi_in)
    : theta(std::move(theta_in)), phi(std::move(phi_in)), psi(std::move(psi_in)) {
  require_nonconstant_theta(theta, "theta_paired");
  require_analytic_scalar(phi, "phi");
  require_analytic_scalar(psi, "psi");
}

OperatorMatrix theta_paired_matrix(const ThetaPairedSpec& spec, int n) {
  const int deg = effective_degree(spec.theta, 1e-5);
  const int sym_deg = std::max(spec.phi.is_zero() ? 0 : spec.phi.hi(),
                               spec.psi.is_zero() ? 0 : spec.psi.hi());
  if (n < deg + sym_deg + 1)
    throw Error(ErrorCode::InvalidArgument,
                "window must cover deg(theta) + max symbol degree");
  const ModelProjections proj = model_projection(spec.theta, n);
  Eigen::MatrixXcd x = toeplitz_matrix(spec.phi, n).data() * proj.p_theta_h2.data() +
                       toeplitz_matrix(spec.psi, n).data() * proj.p_model.data();
  return OperatorMatrix::h2(std::move(x), n, 1);
}

ClassReport test_theta_paired(const OperatorMatrix& x, const TrigPoly& theta,
                              double tol, int guard) {
  require_scalar_h2(x, "test_theta_paired");
  require_nonconstant_theta(theta, "test_theta_paired");
  const int n = x.modes();
  const int eff = effective_degree(theta, 1e-5);
  if (n < eff + 2 || n < theta.hi() + 1)
    throw Error(ErrorCode::InvalidArgument, "window too small for this theta");

  const ModelProjections proj = model_projection(theta, n);
  const Eigen::MatrixXcd& pk = proj.p_model.data();
  const Eigen::MatrixXcd& pt = proj.p_theta_h2.data();
  const int g_inv = guard >= 0 ? guard : eff;
  const int g_comm = guard >= 0 ? guard : 2 * eff + 2;
  const int w_inv = n - g_inv;
  if (w_inv < 1)
    throw Error(ErrorCode::InvalidArgument, "guard leaves no interior window");
  const int w_comm = std::max(n - g_comm, 0);

  double theta_energy = 0.0;
  for (int k = theta.lo(); k <= theta.hi(); ++k)
    theta_energy += std::norm(theta.scalar_coeff(k));

  // h0: reproducing-kernel element of the model space at 0. Its constant
  // term 1 - |theta(0)|^2 is positive for nonconstant inner theta, which is
  // what makes the power-series division below well posed.
  const Complex theta0 = theta.coeff(0)(0, 0);
  Eigen::VectorXcd k0 = -std::conj(theta0) * theta_vector(theta, n);
  k0(0) += 1.0;
  const Eigen::VectorXcd h0 = pk * k0;
  const Complex b0 = h0(0);
  if (std::abs(b0) < std::max(tol, 1e-12))
    throw Error(ErrorCode::NotApplicable,
                "power-series division breakdown: h0 has a vanishing constant term");

  const Eigen::VectorXcd xh0 = x.data() * h0;
  Eigen::VectorXcd nu_full(n);
  for (int k = 0; k < n; ++k) {
    Complex acc = xh0(k);
    for (int i = 1; i <= k; ++i) acc -= h0(i) * nu_full(k - i);
    nu_full(k) = acc / b0;
  }
  TrigPoly nu = trim(vector_to_poly(nu_full),
                     1e-11 * std::max(1.0, nu_full.cwiseAbs().maxCoeff()));

  // Eigenvalue relation X h0 = nu h0 on the guarded coefficients.
  double eig_res = 0.0;
  for (int k = 0; k < w_inv; ++k) {
    Complex conv(0.0, 0.0);
    for (int i = 0; i <= k; ++i) conv += nu.scalar_coeff(i) * h0(k - i);
    eig_res = std::max(eig_res, std::abs(xh0(k) - conv));
  }
  if (eig_res > tol) {
    // Fall back to the untrimmed division output over the guarded window.
    nu = vector_to_poly(nu_full.head(std::max(w_inv, 1)));
    eig_res = 0.0;
    for (int k = 0; k < w_inv; ++k) {
      Complex conv(0.0, 0.0);
      for (int i = 0; i <= k; ++i) conv += nu.scalar_coeff(i) * h0(k - i);
      eig_res = std::max(eig_res, std::abs(xh0(k) - conv));
    }
  }

  // Invariance of theta H^2 under X.
  const Eigen::MatrixXcd inv_mat = pk * x.data() * pt;
  const double inv_res = inv_mat.topLeftCorner(w_inv, w_inv).cwiseAbs().maxCoeff();

  // Commutator identity against (X - T_nu) P_{theta H^2} T_z P_K.
  const Eigen::MatrixXcd tz = toeplitz_matrix(TrigPoly::monomial(1), n).data();
  const Eigen::MatrixXcd lhs = x.data() * tz - tz * x.data();
  const Eigen::MatrixXcd rhs =
      (x.data() - toeplitz_matrix(nu, n).data()) * (pt * (tz * pk));
  double comm_res = 0.0;
  if (w_comm > 0)
    comm_res = (lhs - rhs).topLeftCorner(w_comm, w_comm).cwiseAbs().maxCoeff();

  ClassReport rep;
  rep.residual = std::max({inv_res, comm_res, eig_res});
  rep.verdict = rep.residual <= tol;
  rep.guard = g_comm;
  rep.details["invariance"] = inv_res;
  rep.details["commutator"] = comm_res;
  rep.details["h0_eigen"] = eig_res;
  rep.details["theta_tail"] = std::abs(1.0 - theta_energy);
  rep.details["commutator_window"] = static_cast<double>(w_comm);
  rep.details["nu_degree"] = static_cast<double>(nu.is_zero() ? 0 : nu.hi());
  rep.gauge_note =
      "for fixed theta the symbol pair is unique; theta itself carries a "
      "unimodular gauge";

  if (rep.verdict) {
    // phi is the analytic part of conj_bar(theta) * (X theta).
    const Eigen::VectorXcd chi_vec = x.data() * theta_vector(theta, n);
    const TrigPoly chi = vector_to_poly(chi_vec);
    TrigPoly raw = split_plus_minus(multiply(conj_bar(theta), chi)).first;
    // Coefficients past the guarded band are truncation artifacts.
    const int keep = n - 1 - eff;
    std::vector<Complex> kept;
    for (int k = 0; k <= std::min(raw.is_zero() ? 0 : raw.hi(), keep); ++k)
      kept.push_back(raw.scalar_coeff(k));
    if (kept.empty()) kept.push_back(Complex(0.0, 0.0));
    TrigPoly phi = trim(TrigPoly::scalar(0, kept),
                        1e-11 * std::max(1.0, max_coeff_abs(raw)));
    rep.recovered = SymbolPair(std::move(phi), nu);
  }
  return rep;
}

SymbolPair recover_theta_paired_symbols(const OperatorMatrix& x, const TrigPoly& theta,
                                        double tol, int guard) {
  ClassReport rep = test_theta_paired(x, theta, tol, guard);
  if (!rep.verdict)
    throw Error(ErrorCode::NotApplicable,
                "section is not theta-paired at this tolerance");
  return *rep.recovered;
}

}  // namespace hardyops
