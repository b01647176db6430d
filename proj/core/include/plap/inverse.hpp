// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_INVERSE_HPP
#define PLAP_INVERSE_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "plap/problem.hpp"
#include "plap/result.hpp"

namespace plap
{

/// One state of inverse iteration.
///
/// v is the normalized mimic eigenfunction v^(n), z = D_p(v^(n)). xi holds
/// xi_{n-1} = ||w^(n)||^{1-p} (ND) or varsigma_{n-1} (DN); it is NaN at n = 0.
/// Along the iteration z_{n+1} <= xi_n <= z_n <= xi_{n-1}.
struct InverseState
{
  std::size_t n = 0;
  Fn v;
  double z = 0.0;
  double xi = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> z_history;
};

// v^(0) = initial / ||initial||_{mu,p}, z_0 = D_p(v^(0)).
InverseState start_inverse_iteration(const Problem& problem, std::span<const double> initial);

// Solves -Omega_p w = mu v^{p-1} (w_{N+1} = 0 for ND, w_0 = 0 for DN) and
// renormalizes.
InverseState inverse_step(const Problem& problem, InverseState state);

/// Inverse iteration for the principal eigenpair.
///
/// Stops when |z_n - z_{n-1}| <= tolerance * z_n and residual_norm is within
/// stop.residual_tol. If residual_norm has stopped decreasing (its rounding
/// floor), eigen_defect within stop.residual_tol is accepted instead.
/// upper_history and estimate_history carry z_0, z_1, ...; lower_history is
/// empty since every z_n >= lambda_p.
EigenResult run_inverse_iteration(const Problem& problem, std::span<const double> initial,
                                  const StopRule& stop = {});

// max_k |Omega_p v(k) + lambda mu_k v_k^{p-1}| / (lambda mu_k v_k^{p-1}).
// Expects v strictly positive.
double residual_norm(const Problem& problem, std::span<const double> v, double lambda);

// max_i |lambda II_i(v) - 1|. Since the Poisson solve inverts -Omega_p
// exactly, (v, lambda) is an eigenpair iff II(v) = 1/lambda everywhere.
// Unlike residual_norm this never differences v, so it stays accurate
// when neighbouring entries agree to nearly all stored digits.
double eigen_defect(const Problem& problem, std::span<const double> v, double lambda);

}  // namespace plap

#endif  // PLAP_INVERSE_HPP
