// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_P_OPERATOR_HPP
#define PLAP_P_OPERATOR_HPP

#include <span>

#include "plap/problem.hpp"

namespace plap
{

// The numbers II_i(f) over the active index set. ND:
//   II_i(f) = f_i^{1-p} [ sum_{j>=i} nu_hat_j (sum_{k<=j} mu_k f_k^{p-1})^{p*-1} ]^{p-1}
// DN swaps the roles: the inner sum is a tail sum k >= j, the outer a head
// sum 1 <= j <= i. Scale invariant: II(c f) = II(f).
// Throws DomainError unless f is strictly positive.
Fn operator_ii(const Problem& problem, std::span<const double> f);

// Unique solution g of -Omega_p g = mu f^{p-1} with the problem's boundary
// conditions. Equals f (II(f))^{p*-1} componentwise. ND output is positive
// and strictly decreasing, DN output positive and strictly increasing.
Fn solve_poisson(const Problem& problem, std::span<const double> f);

// ND: nu_hat[k,N]^{1/p*};  DN: nu_hat[1,k]^{1/p*}.
Fn default_initial(const Problem& problem);

// The constant function c on the active set.
Fn constant_function(const Problem& problem, double c = 1.0);

// f -> f (II(f))^{p*-1}, i.e. solve_poisson(f), optionally rescaled so the
// largest entry is 1.
Fn iterate_step(const Problem& problem, std::span<const double> f, bool normalize = true);

// Throws DomainError naming `what` if any entry is not strictly positive.
void require_positive(std::span<const double> f, const char* what);

namespace detail
{

// Closed-form Poisson solution for a nonnegative source; zero entries are
// allowed (used by the masked truncated families).
Fn poisson_solution(const Problem& problem, std::span<const double> f);

// (g_i / f_i)^{p-1}: II(f) given g = poisson_solution(f). Only meaningful
// where f_i > 0.
double ii_entry(const Problem& problem, double f_i, double g_i);

}  // namespace detail

}  // namespace plap

#endif  // PLAP_P_OPERATOR_HPP
