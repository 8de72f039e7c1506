// Copyright 2026 The epba Authors
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

#include "epba/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "epba/error.hpp"

namespace epba {

namespace {

// Largest step keeping m + alpha * dm positive definite, damped by 0.95
// and capped at 1. With m = L L^T the boundary is at -1 / lambda_min of
// L^{-1} dm L^{-T}.
double step_length(const Eigen::MatrixXd& m, const Eigen::MatrixXd& dm) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw SolverFailure("theta SDP: iterate lost positive definiteness");
  const Eigen::MatrixXd l = llt.matrixL();
  Eigen::MatrixXd t = l.triangularView<Eigen::Lower>().solve(dm);
  t = l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
  const double lambda = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                            0.5 * (t + t.transpose()), Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .minCoeff();
  if (lambda >= 0.0) return 1.0;
  return std::min(1.0, 0.95 / -lambda);
}

}  // namespace

ThetaSdpSolution solve_theta_sdp(
    std::size_t n, std::span<const std::pair<int, int>> zero_entries,
    std::span<const double> weights, const SdpOptions& options) {
  if (weights.size() != n) throw InvalidInput("weight vector has wrong size");
  ThetaSdpSolution out;
  if (n == 0) {
    out.x = Eigen::MatrixXd(0, 0);
    return out;
  }
  Eigen::VectorXd s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 0) throw InvalidInput("negative weight");
    s(i) = std::sqrt(weights[i]);
  }
  const Eigen::MatrixXd c = s * s.transpose();
  const std::size_t m1 = zero_entries.size();
  const std::size_t m = m1 + 1;  // last constraint: trace

  // A^T(y) = sum_e y_e (e_i e_j^T + e_j e_i^T) + y_m I.
  auto adjoint = [&](const Eigen::VectorXd& y) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) * y(m1);
    for (std::size_t k = 0; k < m1; ++k) {
      auto [i, j] = zero_entries[k];
      a(i, j) += y(k);
      a(j, i) += y(k);
    }
    return a;
  };

  Eigen::MatrixXd x = Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
  y(m1) = s.squaredNorm() + 1.0;
  Eigen::MatrixXd z = adjoint(y) - c;
  double mu = (z.cwiseProduct(x)).sum() / (2.0 * n);

  for (std::size_t iter = 0;; ++iter) {
    out.primal = (c.cwiseProduct(x)).sum();
    out.dual = y(m1);
    const double gap = out.dual - out.primal;
    out.iterations = iter;
    double residual = std::abs(x.trace() - 1.0);
    for (auto [i, j] : zero_entries) residual = std::max(residual, std::abs(x(i, j)));
    if (std::abs(gap) <= options.gap_tolerance * std::max(1.0, std::abs(out.primal)) &&
        residual <= 1e-9)
      break;
    if (iter >= options.max_iterations) {
      std::ostringstream os;
      os << "theta SDP did not converge after " << iter
         << " iterations: primal " << out.primal << ", dual " << out.dual
         << ", gap " << gap;
      throw SolverFailure(os.str());
    }

    Eigen::MatrixXd zi = z.llt().solve(Eigen::MatrixXd::Identity(n, n));
    zi = (0.5 * (zi + zi.transpose())).eval();

    // Schur complement M_kl = tr(A_k X A_l Z^{-1}).
    Eigen::MatrixXd schur(m, m);
    const Eigen::MatrixXd xzi = x * zi;
    schur(m1, m1) = xzi.trace();
    for (std::size_t k = 0; k < m1; ++k) {
      auto [i, j] = zero_entries[k];
      const double v = xzi(j, i) + xzi(i, j);
      schur(k, m1) = v;
      schur(m1, k) = v;
      for (std::size_t l = k; l < m1; ++l) {
        auto [p, q] = zero_entries[l];
        const double w = x(j, p) * zi(q, i) + x(j, q) * zi(p, i) +
                         x(i, p) * zi(q, j) + x(i, q) * zi(p, j);
        schur(k, l) = w;
        schur(l, k) = w;
      }
    }
    Eigen::VectorXd rhs(m);
    for (std::size_t k = 0; k < m1; ++k) {
      auto [i, j] = zero_entries[k];
      rhs(k) = mu * 2.0 * zi(i, j);
    }
    rhs(m1) = mu * zi.trace() - 1.0;

    const Eigen::VectorXd dy = schur.ldlt().solve(rhs);
    if (!dy.allFinite()) throw SolverFailure("theta SDP: singular Schur complement");
    const Eigen::MatrixXd dz = adjoint(dy);
    Eigen::MatrixXd dx = mu * zi - x - zi * dz * x;
    dx = (0.5 * (dx + dx.transpose())).eval();

    const double alpha_p = step_length(x, dx);
    const double alpha_d = step_length(z, dz);
    x += alpha_p * dx;
    y += alpha_d * dy;
    z = adjoint(y) - c;
    mu = (z.cwiseProduct(x)).sum() / (2.0 * n);
    if (alpha_p + alpha_d > 1.8) mu *= 0.5;
  }

  double residual = std::abs(x.trace() - 1.0);
  for (auto [i, j] : zero_entries) residual = std::max(residual, std::abs(x(i, j)));
  out.primal_residual = residual;
  out.x = std::move(x);
  return out;
}

}  // namespace epba
