// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_RESULT_HPP
#define PLAP_RESULT_HPP

#include <cstddef>
#include <vector>

#include "plap/problem.hpp"

namespace plap
{

/// Stopping rule shared by the iterative solvers.
///
/// The approximation procedure stops once its two-sided bracket
/// |1/delta - 1/delta'| is within tolerance() of 1/delta_bar. Inverse
/// iteration stops once consecutive z_n agree to tolerance() relative and the
/// eigen-equation residual is at most residual_tol.
struct StopRule
{
  int sig_digits = 6;
  double rel_tol = 5e-7;
  std::size_t max_iter = 100000;
  double residual_tol = 1e-6;

  // min(rel_tol, 0.5 * 10^-sig_digits)
  double tolerance() const;

  // Throws DomainError on sig_digits < 1, rel_tol <= 0, max_iter < 1 or
  // residual_tol <= 0.
  void validate() const;

  bool operator==(const StopRule&) const = default;
};

struct EigenResult
{
  double lambda = 0.0;
  Fn eigenfunction;  // normalized, ||.||_{mu,p} = 1
  double residual = 0.0;
  // approx: 1/delta_n (nondecreasing); inverse: empty
  std::vector<double> lower_history;
  // approx: 1/delta'_n (nonincreasing); inverse: z_n
  std::vector<double> upper_history;
  // The running point estimate: 1/delta_bar_n for approx, z_n for inverse.
  std::vector<double> estimate_history;
  std::size_t iterations = 0;
  bool converged = false;
};

}  // namespace plap

#endif  // PLAP_RESULT_HPP
