// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plap
{

namespace
{

void check_length(const Problem& problem, std::span<const double> f)
{
  if (f.size() != problem.size())
  {
    throw std::invalid_argument("function length does not match the index set");
  }
}

// Difference attached to the edge carrying nu at position i: f_{k+1} - f_k for
// ND, f_{k-1} - f_k for DN, with the Dirichlet value 0 past the boundary.
double edge_difference(const Problem& problem, std::span<const double> f, std::size_t i)
{
  const std::size_t n = f.size();
  if (problem.boundary() == BoundaryCase::ND)
  {
    const double next = i + 1 < n ? f[i + 1] : 0.0;
    return next - f[i];
  }
  const double prev = i > 0 ? f[i - 1] : 0.0;
  return prev - f[i];
}

}  // namespace

double sigma_p(const Problem& problem)
{
  const auto mu = problem.mu();
  const auto nu_hat = problem.nu_hat();
  const std::size_t n = mu.size();
  const double q = problem.p() - 1.0;

  // The mass side accumulates toward the Neumann end, the dual side toward
  // the Dirichlet end.
  std::vector<double> dual(n);
  double best = 0.0;
  if (problem.boundary() == BoundaryCase::ND)
  {
    double tail = 0.0;
    for (std::size_t i = n; i-- > 0;)
    {
      tail += nu_hat[i];
      dual[i] = tail;
    }
    double head = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      head += mu[i];
      best = std::max(best, head * std::pow(dual[i], q));
    }
  }
  else
  {
    double head = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      head += nu_hat[i];
      dual[i] = head;
    }
    double tail = 0.0;
    for (std::size_t i = n; i-- > 0;)
    {
      tail += mu[i];
      best = std::max(best, tail * std::pow(dual[i], q));
    }
  }
  return best;
}

double d_p_energy(const Problem& problem, std::span<const double> f)
{
  check_length(problem, f);
  const auto nu = problem.nu();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    sum += nu[i] * std::pow(std::abs(edge_difference(problem, f, i)), problem.p());
  }
  return sum;
}

double mu_power_sum(const Problem& problem, std::span<const double> f)
{
  check_length(problem, f);
  const auto mu = problem.mu();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    sum += mu[i] * std::pow(std::abs(f[i]), problem.p());
  }
  return sum;
}

double lp_norm_mu(const Problem& problem, std::span<const double> f)
{
  return std::pow(mu_power_sum(problem, f), 1.0 / problem.p());
}

double pairing(std::span<const double> g, std::span<const double> f)
{
  if (g.size() != f.size())
  {
    throw std::invalid_argument("pairing: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    sum += g[i] * f[i];
  }
  return sum;
}

Fn apply_omega(const Problem& problem, std::span<const double> f)
{
  check_length(problem, f);
  const auto nu = problem.nu();
  const double q = problem.p() - 1.0;
  const std::size_t n = f.size();

  // flux[i] = nu_i sgn(d_i)|d_i|^{p-1} on the edge owned by position i
  std::vector<double> flux(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    flux[i] = nu[i] * signed_pow(edge_difference(problem, f, i), q);
  }

  Fn out(n);
  if (problem.boundary() == BoundaryCase::ND)
  {
    // Omega f(k) = T_k - T_{k-1}, T_{-1} = 0
    for (std::size_t i = 0; i < n; ++i)
    {
      out[i] = flux[i] - (i > 0 ? flux[i - 1] : 0.0);
    }
  }
  else
  {
    // Omega f(k) = -L_{k+1} + L_k, L_{N+1} = 0
    for (std::size_t i = 0; i < n; ++i)
    {
      out[i] = flux[i] - (i + 1 < n ? flux[i + 1] : 0.0);
    }
  }
  return out;
}

}  // namespace plap
