// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plap/chain.hpp"
#include "plap/errors.hpp"
#include "plap/p_operator.hpp"

namespace plap
{

InverseState start_inverse_iteration(const Problem& problem, std::span<const double> initial)
{
  require_positive(initial, "initial function");
  if (initial.size() != problem.size())
  {
    throw std::invalid_argument("initial function length does not match the index set");
  }
  InverseState state;
  state.v.assign(initial.begin(), initial.end());
  const double norm = lp_norm_mu(problem, state.v);
  for (double& x : state.v)
  {
    x /= norm;
  }
  state.z = d_p_energy(problem, state.v);
  state.z_history.push_back(state.z);
  return state;
}

InverseState inverse_step(const Problem& problem, InverseState state)
{
  Fn w = solve_poisson(problem, state.v);
  const double norm = lp_norm_mu(problem, w);
  for (double& x : w)
  {
    x /= norm;
  }
  state.v = std::move(w);
  state.z = d_p_energy(problem, state.v);
  // ND: xi_{n-1} = ||w^(n)||^{1-p}. DN: varsigma_{n-1} =
  // ||w^(n)||^{1-p} ||w^(n-1)||^{p-1} on the unnormalized chain; the Poisson
  // solve is 1-homogeneous, so solving from the normalized iterate absorbs the
  // second factor and both cases reduce to the same expression.
  state.xi = std::pow(norm, 1.0 - problem.p());
  state.z_history.push_back(state.z);
  ++state.n;
  return state;
}

EigenResult run_inverse_iteration(const Problem& problem, std::span<const double> initial,
                                  const StopRule& stop)
{
  stop.validate();
  const double tol = stop.tolerance();

  InverseState state = start_inverse_iteration(problem, initial);
  EigenResult result;
  double residual = residual_norm(problem, state.v, state.z);

  while (state.n < stop.max_iter)
  {
    const double previous_z = state.z;
    const double previous_residual = residual;
    state = inverse_step(problem, std::move(state));
    residual = residual_norm(problem, state.v, state.z);
    if (std::abs(state.z - previous_z) > tol * state.z)
    {
      continue;
    }
    // The entrywise residual differences v and bottoms out at a rounding
    // floor when neighbouring entries nearly coincide. Once it stops
    // improving, the cancellation-free defect decides instead.
    const bool at_floor = residual >= previous_residual;
    if (residual <= stop.residual_tol ||
        (at_floor && eigen_defect(problem, state.v, state.z) <= stop.residual_tol))
    {
      result.converged = true;
      break;
    }
  }

  result.lambda = state.z;
  result.residual = residual;
  result.iterations = state.n;
  result.upper_history = state.z_history;
  result.estimate_history = std::move(state.z_history);
  result.eigenfunction = std::move(state.v);
  return result;
}

double residual_norm(const Problem& problem, std::span<const double> v, double lambda)
{
  require_positive(v, "eigenfunction");
  const Fn omega = apply_omega(problem, v);
  const auto mu = problem.mu();
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    const double source = lambda * mu[i] * std::pow(v[i], problem.p() - 1.0);
    worst = std::max(worst, std::abs(omega[i] + source) / source);
  }
  return worst;
}

double eigen_defect(const Problem& problem, std::span<const double> v, double lambda)
{
  const Fn ii = operator_ii(problem, v);
  double worst = 0.0;
  for (double x : ii)
  {
    worst = std::max(worst, std::abs(lambda * x - 1.0));
  }
  return worst;
}

}  // namespace plap
