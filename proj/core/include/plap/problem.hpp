// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_PROBLEM_HPP
#define PLAP_PROBLEM_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace plap
{

// ND: Neumann at the left end (nu_{-1} = 0), Dirichlet f_{N+1} = 0 at the right.
// DN: Dirichlet f_0 = 0 at the left, Neumann (nu_{N+1} = 0) at the right.
enum class BoundaryCase
{
  ND,
  DN
};

std::string_view to_string(BoundaryCase boundary);

// Accepts "ND"/"DN" (case-insensitive). Throws DomainError otherwise.
BoundaryCase parse_boundary_case(std::string_view text);

// A function on the active index set, stored by position. Boundary values
// are never stored; every operation injects them.
using Fn = std::vector<double>;

// p* = p/(p-1). Throws DomainError for p <= 1.
double conjugate_exponent(double p);

// sgn(x)|x|^q, finite for negative x and fractional q.
double signed_pow(double x, double q);

// Sum of seq[m..n] by position; 0 when m > n. Throws std::out_of_range if a
// non-empty range leaves the sequence.
double interval_mass(std::span<const double> seq, std::ptrdiff_t m, std::ptrdiff_t n);

/// An eigenproblem instance for the weighted p-Laplacian on a path.
///
/// Weights are stored by position over the active index set: {0..N} for ND,
/// {1..N} for DN (position i holds index i + first_index()). The dual weights
/// nu_hat_j = nu_j^{1-p*} are precomputed.
class Problem
{
public:
  Problem(BoundaryCase boundary, double p, std::vector<double> mu, std::vector<double> nu);

  BoundaryCase boundary() const noexcept { return boundary_; }
  double p() const noexcept { return p_; }
  double p_star() const noexcept { return p_star_; }

  // N, the right end of the index set.
  int n_max() const noexcept;
  // Number of active indices: N+1 for ND, N for DN.
  std::size_t size() const noexcept { return mu_.size(); }
  int first_index() const noexcept { return boundary_ == BoundaryCase::ND ? 0 : 1; }

  std::span<const double> mu() const noexcept { return mu_; }
  std::span<const double> nu() const noexcept { return nu_; }
  std::span<const double> nu_hat() const noexcept { return nu_hat_; }

  // nu_hat at index j (not position). Throws std::out_of_range.
  double nu_hat(int j) const;

  bool operator==(const Problem& other) const = default;

private:
  BoundaryCase boundary_;
  double p_;
  double p_star_;
  std::vector<double> mu_;
  std::vector<double> nu_;
  std::vector<double> nu_hat_;
};

// Builds a problem by evaluating mu(k), nu(k) at every index k of the active set.
Problem make_problem(BoundaryCase boundary, double p, int n_max,
                     const std::function<double(int)>& mu,
                     const std::function<double(int)>& nu);

}  // namespace plap

#endif  // PLAP_PROBLEM_HPP
