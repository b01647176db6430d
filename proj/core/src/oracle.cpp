// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "plap/chain.hpp"
#include "plap/errors.hpp"

namespace plap
{

bool ShootingTrace::positive() const
{
  return std::all_of(g.begin(), g.end(), [](double x) { return x > 0.0; });
}

ShootingTrace shoot(const Problem& problem, double lambda)
{
  const auto mu = problem.mu();
  const auto nu = problem.nu();
  const double q = problem.p() - 1.0;
  const double r = problem.p_star() - 1.0;
  const std::size_t n = problem.size();

  ShootingTrace trace;
  trace.lambda = lambda;
  trace.g.assign(n + 1, 0.0);

  double flux = 0.0;
  if (problem.boundary() == BoundaryCase::ND)
  {
    // T_k = T_{k-1} - lambda mu_k g_k^{p-1}, g_{k+1} = g_k + sgn(T_k)(|T_k|/nu_k)^{p*-1}
    trace.g[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k)
    {
      flux -= lambda * mu[k] * signed_pow(trace.g[k], q);
      trace.g[k + 1] = trace.g[k] + signed_pow(flux / nu[k], r);
    }
    trace.terminal = trace.g[n];
  }
  else
  {
    // L_k = L_{k+1} - lambda mu_k g_k^{p-1}, g_{k-1} = g_k + sgn(L_k)(|L_k|/nu_k)^{p*-1}
    // with L_{N+1} = 0; position i of mu/nu is index i+1.
    trace.g[n] = 1.0;
    for (std::size_t k = n; k >= 1; --k)
    {
      flux -= lambda * mu[k - 1] * signed_pow(trace.g[k], q);
      trace.g[k - 1] = trace.g[k] + signed_pow(flux / nu[k - 1], r);
    }
    trace.terminal = trace.g[0];
  }
  return trace;
}

double principal_eigenvalue_bruteforce(const Problem& problem, double tol)
{
  if (problem.n_max() > kOracleMaxN)
  {
    throw SizeError("shooting oracle limited to N <= " + std::to_string(kOracleMaxN));
  }
  if (!(tol > 0.0))
  {
    throw DomainError("oracle tolerance must be positive");
  }

  const double sigma = sigma_p(problem);
  double lo = 0.25 / sigma;
  for (int i = 0; !shoot(problem, lo).positive(); ++i)
  {
    if (i > 200)
    {
      throw OracleFailure("shooting oracle found no positive shot");
    }
    lo *= 0.25;
  }

  const double cap = 1e3 / sigma;
  double hi = lo;
  while (true)
  {
    hi = lo * 1.05;
    if (hi > cap)
    {
      throw OracleFailure("shooting oracle found no crossing below 1e3/sigma_p");
    }
    if (!shoot(problem, hi).positive())
    {
      break;
    }
    lo = hi;
  }

  for (int i = 0; i < 400 && hi - lo > tol * hi; ++i)
  {
    const double mid = 0.5 * (lo + hi);
    if (shoot(problem, mid).positive())
    {
      lo = mid;
    }
    else
    {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace
{

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below x.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x)
{
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i)
  {
    const double coupling = i > 0 ? off[i - 1] * off[i - 1] / d : 0.0;
    d = diag[i] - x - coupling;
    if (d == 0.0)
    {
      d = -std::numeric_limits<double>::epsilon() * (std::abs(diag[i]) + std::abs(x) + 1.0);
    }
    if (d < 0.0)
    {
      ++count;
    }
  }
  return count;
}

}  // namespace

double linear_principal_eigenvalue(const Problem& problem)
{
  if (problem.p() != 2.0)
  {
    throw DomainError("linear_principal_eigenvalue requires p = 2");
  }
  const auto mu = problem.mu();
  const auto nu = problem.nu();
  const std::size_t n = problem.size();

  // -Omega_2 f(k) = (nu_k + nu_{k-1}) f_k - nu_k f_{k+1} - nu_{k-1} f_{k-1} (ND)
  // -Omega_2 f(k) = (nu_k + nu_{k+1}) f_k - nu_{k+1} f_{k+1} - nu_k f_{k-1} (DN)
  std::vector<double> diag(n);
  std::vector<double> off(n > 0 ? n - 1 : 0);
  const bool nd = problem.boundary() == BoundaryCase::ND;
  for (std::size_t i = 0; i < n; ++i)
  {
    double stiffness = nu[i];
    if (nd && i > 0)
    {
      stiffness += nu[i - 1];
    }
    if (!nd && i + 1 < n)
    {
      stiffness += nu[i + 1];
    }
    diag[i] = stiffness / mu[i];
    if (i + 1 < n)
    {
      const double edge = nd ? nu[i] : nu[i + 1];
      off[i] = -edge / std::sqrt(mu[i] * mu[i + 1]);
    }
  }

  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    double radius = diag[i];
    if (i > 0)
    {
      radius += std::abs(off[i - 1]);
    }
    if (i + 1 < n)
    {
      radius += std::abs(off[i]);
    }
    hi = std::max(hi, radius);
  }
  double lo = 0.0;
  for (int i = 0; i < 400 && hi - lo > 1e-13 * hi; ++i)
  {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off, mid) >= 1)
    {
      hi = mid;
    }
    else
    {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace plap
