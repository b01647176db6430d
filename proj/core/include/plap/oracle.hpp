// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_ORACLE_HPP
#define PLAP_ORACLE_HPP

#include <vector>

#include "plap/problem.hpp"

// Brute-force principal eigenvalue routines used to cross-check the
// iterative solvers. They share no code path with operator II or the
// closed-form Poisson solve.

namespace plap
{

// A candidate eigenfunction shot from the Neumann end with unit seed.
// g is stored by index 0..N+1 for ND (g[0] = 1, terminal = g[N+1]) and by
// index 0..N for DN (g[N] = 1, terminal = g[0]).
struct ShootingTrace
{
  double lambda = 0.0;
  std::vector<double> g;
  double terminal = 0.0;

  // Every entry, including the far boundary value, is strictly positive.
  // True exactly for lambda below the principal eigenvalue.
  bool positive() const;
};

// Integrates -Omega_p g = lambda mu g^{p-1} one index at a time through the
// flux T_k = nu_k sgn(d_k)|d_k|^{p-1}.
ShootingTrace shoot(const Problem& problem, double lambda);

inline constexpr int kOracleMaxN = 64;

/// Smallest lambda whose shot reaches zero at the Dirichlet end.
///
/// Scans geometrically (factor 1.05) upward from 1/(4 sigma_p) for the first
/// lambda whose shot is no longer positive, then bisects to relative width
/// tol. Throws SizeError for N > kOracleMaxN and OracleFailure if no
/// crossing is found below 1e3 / sigma_p.
double principal_eigenvalue_bruteforce(const Problem& problem, double tol = 1e-13);

// p = 2 only: smallest eigenvalue of the symmetric tridiagonal matrix
// M^{-1/2} (-Omega_2) M^{-1/2}, M = diag(mu), by Sturm-sequence bisection to
// relative width 1e-13. Throws DomainError if p != 2.
double linear_principal_eigenvalue(const Problem& problem);

}  // namespace plap

#endif  // PLAP_ORACLE_HPP
