// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_CHAIN_HPP
#define PLAP_CHAIN_HPP

#include <span>

#include "plap/problem.hpp"

namespace plap
{

// ND: sup_n mu[0,n] nu_hat[n,N]^{p-1};  DN: sup_n mu[n,N] nu_hat[1,n]^{p-1}.
double sigma_p(const Problem& problem);

// The p-Dirichlet energy: sum_k nu_k |difference_k f|^p with the Dirichlet
// boundary value injected (forward differences for ND, left differences for DN).
double d_p_energy(const Problem& problem, std::span<const double> f);

// (sum_k mu_k |f_k|^p)^{1/p}
double lp_norm_mu(const Problem& problem, std::span<const double> f);

// sum_k mu_k |f_k|^p
double mu_power_sum(const Problem& problem, std::span<const double> f);

// Plain (unweighted) pairing sum_k g_k f_k over the active set.
double pairing(std::span<const double> g, std::span<const double> f);

// The weighted p-Laplacian Omega_p f on the active index set.
Fn apply_omega(const Problem& problem, std::span<const double> f);

}  // namespace plap

#endif  // PLAP_CHAIN_HPP
