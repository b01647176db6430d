// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "plap/chain.hpp"
#include "plap/errors.hpp"
#include "plap/inverse.hpp"
#include "plap/p_operator.hpp"

namespace plap
{

double StopRule::tolerance() const
{
  return std::min(rel_tol, 0.5 * std::pow(10.0, -sig_digits));
}

void StopRule::validate() const
{
  if (sig_digits < 1)
  {
    throw DomainError("stop.sig_digits must be at least 1");
  }
  if (!(rel_tol > 0.0))
  {
    throw DomainError("stop.rel_tol must be positive");
  }
  if (max_iter < 1)
  {
    throw DomainError("stop.max_iter must be at least 1");
  }
  if (!(residual_tol > 0.0))
  {
    throw DomainError("stop.residual_tol must be positive");
  }
}

namespace
{

double rayleigh_ratio(const Problem& problem, std::span<const double> f)
{
  const double energy = d_p_energy(problem, f);
  if (!(energy > 0.0))
  {
    throw std::logic_error("D_p vanished on a nonzero function");
  }
  return mu_power_sum(problem, f) / energy;
}

BoundTriple triple_from_solution(const Problem& problem, std::span<const double> f,
                                 std::span<const double> g)
{
  BoundTriple t;
  t.delta = -std::numeric_limits<double>::infinity();
  t.delta_prime = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    const double ii = detail::ii_entry(problem, f[i], g[i]);
    t.delta = std::max(t.delta, ii);
    t.delta_prime = std::min(t.delta_prime, ii);
  }
  t.delta_bar = rayleigh_ratio(problem, f);
  return t;
}

void scale_to_unit_max(Fn& f)
{
  const double top = *std::max_element(f.begin(), f.end());
  for (double& x : f)
  {
    x /= top;
  }
}

// Cached Poisson solution of the current iterate; the next iterate is this
// vector rescaled, so each step costs one solve.
struct Stepper
{
  ApproxState state;
  Fn solution;
};

Stepper begin(const Problem& problem, std::span<const double> initial)
{
  require_positive(initial, "initial function");
  if (initial.size() != problem.size())
  {
    throw std::invalid_argument("initial function length does not match the index set");
  }
  Stepper s;
  s.state.n = 1;
  s.state.f.assign(initial.begin(), initial.end());
  scale_to_unit_max(s.state.f);
  s.solution = detail::poisson_solution(problem, s.state.f);
  s.state.bounds = triple_from_solution(problem, s.state.f, s.solution);
  s.state.history.push_back(s.state.bounds);
  return s;
}

void step(const Problem& problem, Stepper& s)
{
  s.state.f = std::move(s.solution);
  scale_to_unit_max(s.state.f);
  s.solution = detail::poisson_solution(problem, s.state.f);
  s.state.bounds = triple_from_solution(problem, s.state.f, s.solution);
  s.state.history.push_back(s.state.bounds);
  ++s.state.n;
}

}  // namespace

BoundTriple bound_triple(const Problem& problem, std::span<const double> f)
{
  require_positive(f, "bound_triple argument");
  const Fn g = detail::poisson_solution(problem, f);
  return triple_from_solution(problem, f, g);
}

ApproxState start_approximation(const Problem& problem, std::span<const double> initial)
{
  return begin(problem, initial).state;
}

ApproxState advance(const Problem& problem, ApproxState state)
{
  Stepper s;
  s.solution = detail::poisson_solution(problem, state.f);
  s.state = std::move(state);
  step(problem, s);
  return std::move(s.state);
}

EigenResult run_approximation(const Problem& problem, std::span<const double> initial,
                              const StopRule& stop)
{
  stop.validate();
  const double tol = stop.tolerance();

  Stepper s = begin(problem, initial);
  EigenResult result;
  auto record = [&result](const BoundTriple& t) {
    result.lower_history.push_back(1.0 / t.delta);
    result.upper_history.push_back(1.0 / t.delta_prime);
    result.estimate_history.push_back(1.0 / t.delta_bar);
  };
  record(s.state.bounds);

  while (true)
  {
    const BoundTriple& t = s.state.bounds;
    if (std::abs(1.0 / t.delta - 1.0 / t.delta_prime) <= tol / t.delta_bar)
    {
      result.converged = true;
      break;
    }
    if (s.state.n >= stop.max_iter)
    {
      break;
    }
    step(problem, s);
    record(s.state.bounds);
  }

  result.iterations = s.state.n;
  result.lambda = 1.0 / s.state.bounds.delta_bar;
  result.eigenfunction = s.state.f;
  const double norm = lp_norm_mu(problem, result.eigenfunction);
  for (double& x : result.eigenfunction)
  {
    x /= norm;
  }
  result.residual = residual_norm(problem, result.eigenfunction, result.lambda);
  return result;
}

namespace
{

void check_family_size(const Problem& problem, int n_steps)
{
  if (n_steps < 1)
  {
    throw DomainError("truncated family needs n_steps >= 1");
  }
  if (problem.n_max() > kTruncatedFamilyMaxN)
  {
    throw SizeError("truncated family enumeration refuses N = " +
                    std::to_string(problem.n_max()) + " (limit " +
                    std::to_string(kTruncatedFamilyMaxN) + ")");
  }
  if (problem.boundary() == BoundaryCase::ND && problem.n_max() < 1)
  {
    throw DomainError("truncated ND family needs N >= 1 (pairs l < m)");
  }
}

// Runs one member of a family and folds its bounds into `best`. `last` is the
// position of m; the inf of II runs over positions <= last unless
// min_over_all. `update` turns (f, poisson(f)) into the next member iterate.
template <typename Update>
void run_member(const Problem& problem, Fn f, std::size_t last, bool min_over_all, int n_steps,
                std::vector<TruncatedBounds>& best, Update update)
{
  for (int n = 0; n < n_steps; ++n)
  {
    const Fn g = detail::poisson_solution(problem, f);
    const std::size_t span_end = min_over_all ? f.size() : last + 1;
    double inf_ii = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < span_end; ++i)
    {
      inf_ii = std::min(inf_ii, detail::ii_entry(problem, f[i], g[i]));
    }
    best[n].delta_prime = std::max(best[n].delta_prime, inf_ii);
    best[n].delta_bar = std::max(best[n].delta_bar, rayleigh_ratio(problem, f));
    if (n + 1 < n_steps)
    {
      update(f, g);
      scale_to_unit_max(f);
    }
  }
}

}  // namespace

std::vector<TruncatedBounds> truncated_family_history(const Problem& problem, int n_steps)
{
  check_family_size(problem, n_steps);
  const auto nu_hat = problem.nu_hat();
  const std::size_t size = problem.size();
  std::vector<TruncatedBounds> best(static_cast<std::size_t>(n_steps));

  if (problem.boundary() == BoundaryCase::ND)
  {
    for (std::size_t m = 1; m < size; ++m)
    {
      for (std::size_t l = 0; l < m; ++l)
      {
        Fn f(size, 0.0);
        for (std::size_t i = 0; i <= m; ++i)
        {
          f[i] = interval_mass(nu_hat, static_cast<std::ptrdiff_t>(std::max(i, l)),
                               static_cast<std::ptrdiff_t>(m));
        }
        run_member(problem, std::move(f), m, false, n_steps, best,
                   [m](Fn& cur, const Fn& g) {
                     for (std::size_t i = 0; i < cur.size(); ++i)
                     {
                       cur[i] = i <= m ? g[i] : 0.0;
                     }
                   });
      }
    }
  }
  else
  {
    for (std::size_t m = 0; m < size; ++m)
    {
      Fn f(size);
      for (std::size_t i = 0; i < size; ++i)
      {
        f[i] = interval_mass(nu_hat, 0, static_cast<std::ptrdiff_t>(std::min(i, m)));
      }
      run_member(problem, std::move(f), m, true, n_steps, best,
                 [m, &problem](Fn& cur, const Fn& g) {
                   Fn next(cur.size());
                   for (std::size_t i = 0; i < cur.size(); ++i)
                   {
                     const std::size_t c = std::min(i, m);
                     next[i] = cur[i] * std::pow(detail::ii_entry(problem, cur[c], g[c]),
                                                 problem.p_star() - 1.0);
                   }
                   cur = std::move(next);
                 });
    }
  }
  return best;
}

TruncatedBounds truncated_family_bounds(const Problem& problem, int n_steps)
{
  return truncated_family_history(problem, n_steps).back();
}

}  // namespace plap
