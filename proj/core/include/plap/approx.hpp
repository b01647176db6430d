// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_APPROX_HPP
#define PLAP_APPROX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "plap/problem.hpp"
#include "plap/result.hpp"

namespace plap
{

// sup, inf and Rayleigh-type ratio of one iterate. For iterates of the
// scheme, 1/delta <= lambda_p <= 1/delta_bar(next) <= 1/delta_prime.
struct BoundTriple
{
  double delta = 0.0;        // max_i II_i(f)
  double delta_prime = 0.0;  // min_i II_i(f)
  double delta_bar = 0.0;    // mu(f^p) / D_p(f)
};

struct ApproxState
{
  std::size_t n = 0;  // index of the current iterate f^(n), starting at 1
  Fn f;               // max-normalized
  BoundTriple bounds;
  std::vector<BoundTriple> history;
};

BoundTriple bound_triple(const Problem& problem, std::span<const double> f);

// State holding f^(1) = initial (rescaled to max 1) and its bounds.
ApproxState start_approximation(const Problem& problem, std::span<const double> initial);

// f^(n) -> f^(n+1), appending the new bounds to the history.
ApproxState advance(const Problem& problem, ApproxState state);

/// Runs the monotone approximation procedure from `initial`.
///
/// Iterates f -> f (II(f))^{p*-1} with per-step max-normalization and stops
/// when the bracket [1/delta_n, 1/delta'_n] closes to the stop rule's
/// tolerance. lambda is 1/delta_bar of the last iterate. Hitting max_iter
/// returns a result with converged == false.
EigenResult run_approximation(const Problem& problem, std::span<const double> initial,
                              const StopRule& stop = {});

struct TruncatedBounds
{
  double delta_prime = 0.0;
  double delta_bar = 0.0;
};

// Largest N accepted by the truncated-family enumeration.
inline constexpr int kTruncatedFamilyMaxN = 512;

// Bounds from the truncated test-function families after n_steps iterations.
// ND enumerates pairs 0 <= l < m <= N with f^(1,l,m) = nu_hat[. v l, m] 1_{<=m}
// and masks by 1_{<=m} after each step; DN enumerates m in 1..N with
// f^(1,m) = nu_hat[1, . ^ m] and clamps the argument at m.
// Throws SizeError for N > kTruncatedFamilyMaxN and DomainError when the
// family is empty (ND with N = 0) or n_steps < 1.
TruncatedBounds truncated_family_bounds(const Problem& problem, int n_steps);

// Same enumeration, returning the suprema for every n = 1..n_steps.
std::vector<TruncatedBounds> truncated_family_history(const Problem& problem, int n_steps);

}  // namespace plap

#endif  // PLAP_APPROX_HPP
