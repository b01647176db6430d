// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/p_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "plap/errors.hpp"

namespace plap
{

void require_positive(std::span<const double> f, const char* what)
{
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    if (!(f[i] > 0.0) || !std::isfinite(f[i]))
    {
      throw DomainError(std::string(what) + " must be strictly positive (position " +
                        std::to_string(i) + ")");
    }
  }
}

namespace detail
{

Fn poisson_solution(const Problem& problem, std::span<const double> f)
{
  if (f.size() != problem.size())
  {
    throw std::invalid_argument("function length does not match the index set");
  }
  const auto mu = problem.mu();
  const auto nu_hat = problem.nu_hat();
  const double q = problem.p() - 1.0;
  const double r = problem.p_star() - 1.0;
  const std::size_t n = f.size();

  Fn g(n);
  if (problem.boundary() == BoundaryCase::ND)
  {
    // flux_j = nu_hat_j (mu[0..j] f^{p-1})^{p*-1}, then g_k = sum_{j>=k} flux_j
    double mass = 0.0;
    for (std::size_t j = 0; j < n; ++j)
    {
      mass += mu[j] * std::pow(f[j], q);
      g[j] = nu_hat[j] * std::pow(mass, r);
    }
    double acc = 0.0;
    for (std::size_t j = n; j-- > 0;)
    {
      acc += g[j];
      g[j] = acc;
    }
  }
  else
  {
    double mass = 0.0;
    for (std::size_t j = n; j-- > 0;)
    {
      mass += mu[j] * std::pow(f[j], q);
      g[j] = nu_hat[j] * std::pow(mass, r);
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
    {
      acc += g[j];
      g[j] = acc;
    }
  }
  return g;
}

double ii_entry(const Problem& problem, double f_i, double g_i)
{
  return std::pow(g_i / f_i, problem.p() - 1.0);
}

}  // namespace detail

Fn operator_ii(const Problem& problem, std::span<const double> f)
{
  require_positive(f, "operator_ii argument");
  const Fn g = detail::poisson_solution(problem, f);
  Fn out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    out[i] = detail::ii_entry(problem, f[i], g[i]);
  }
  return out;
}

Fn solve_poisson(const Problem& problem, std::span<const double> f)
{
  require_positive(f, "Poisson source");
  return detail::poisson_solution(problem, f);
}

Fn default_initial(const Problem& problem)
{
  const auto nu_hat = problem.nu_hat();
  const std::size_t n = nu_hat.size();
  const double exponent = 1.0 / problem.p_star();
  Fn f(n);
  double acc = 0.0;
  if (problem.boundary() == BoundaryCase::ND)
  {
    for (std::size_t i = n; i-- > 0;)
    {
      acc += nu_hat[i];
      f[i] = std::pow(acc, exponent);
    }
  }
  else
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      acc += nu_hat[i];
      f[i] = std::pow(acc, exponent);
    }
  }
  return f;
}

Fn constant_function(const Problem& problem, double c)
{
  return Fn(problem.size(), c);
}

Fn iterate_step(const Problem& problem, std::span<const double> f, bool normalize)
{
  Fn g = solve_poisson(problem, f);
  if (normalize)
  {
    const double top = *std::max_element(g.begin(), g.end());
    for (double& x : g)
    {
      x /= top;
    }
  }
  return g;
}

}  // namespace plap
