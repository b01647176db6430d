// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "plap/errors.hpp"

namespace plap
{

std::string_view to_string(BoundaryCase boundary)
{
  return boundary == BoundaryCase::ND ? "ND" : "DN";
}

BoundaryCase parse_boundary_case(std::string_view text)
{
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "ND")
  {
    return BoundaryCase::ND;
  }
  if (upper == "DN")
  {
    return BoundaryCase::DN;
  }
  throw DomainError("boundary case must be ND or DN, got '" + std::string(text) + "'");
}

double conjugate_exponent(double p)
{
  if (!(p > 1.0) || !std::isfinite(p))
  {
    throw DomainError("p must exceed 1");
  }
  return p / (p - 1.0);
}

double signed_pow(double x, double q)
{
  if (x == 0.0)
  {
    return 0.0;
  }
  return std::copysign(std::pow(std::abs(x), q), x);
}

double interval_mass(std::span<const double> seq, std::ptrdiff_t m, std::ptrdiff_t n)
{
  if (m > n)
  {
    return 0.0;
  }
  if (m < 0 || n >= static_cast<std::ptrdiff_t>(seq.size()))
  {
    throw std::out_of_range("interval_mass: range [" + std::to_string(m) + ", " +
                            std::to_string(n) + "] outside sequence of length " +
                            std::to_string(seq.size()));
  }
  double sum = 0.0;
  for (std::ptrdiff_t j = m; j <= n; ++j)
  {
    sum += seq[static_cast<std::size_t>(j)];
  }
  return sum;
}

namespace
{

void check_weights(const std::vector<double>& w, const char* name)
{
  for (std::size_t i = 0; i < w.size(); ++i)
  {
    if (!(w[i] > 0.0) || !std::isfinite(w[i]))
    {
      throw DomainError(std::string(name) + " must be positive and finite (position " +
                        std::to_string(i) + ")");
    }
  }
}

}  // namespace

Problem::Problem(BoundaryCase boundary, double p, std::vector<double> mu, std::vector<double> nu)
  : boundary_(boundary), p_(p), p_star_(conjugate_exponent(p)), mu_(std::move(mu)),
    nu_(std::move(nu))
{
  if (mu_.empty())
  {
    throw DomainError(boundary_ == BoundaryCase::DN ? "DN problems need N >= 1"
                                                     : "index set must be non-empty");
  }
  if (mu_.size() != nu_.size())
  {
    throw DomainError("mu and nu must have the same length");
  }
  check_weights(mu_, "mu");
  check_weights(nu_, "nu");
  nu_hat_.resize(nu_.size());
  const double exponent = 1.0 - p_star_;
  std::transform(nu_.begin(), nu_.end(), nu_hat_.begin(),
                 [exponent](double v) { return std::pow(v, exponent); });
}

int Problem::n_max() const noexcept
{
  const int count = static_cast<int>(mu_.size());
  return boundary_ == BoundaryCase::ND ? count - 1 : count;
}

double Problem::nu_hat(int j) const
{
  const int pos = j - first_index();
  if (pos < 0 || pos >= static_cast<int>(nu_hat_.size()))
  {
    throw std::out_of_range("nu_hat: index " + std::to_string(j) + " outside the index set");
  }
  return nu_hat_[static_cast<std::size_t>(pos)];
}

Problem make_problem(BoundaryCase boundary, double p, int n_max,
                     const std::function<double(int)>& mu,
                     const std::function<double(int)>& nu)
{
  const int first = boundary == BoundaryCase::ND ? 0 : 1;
  if (n_max < first)
  {
    throw DomainError("n_max too small for the boundary case");
  }
  std::vector<double> mu_values;
  std::vector<double> nu_values;
  for (int k = first; k <= n_max; ++k)
  {
    mu_values.push_back(mu(k));
    nu_values.push_back(nu(k));
  }
  return Problem(boundary, p, std::move(mu_values), std::move(nu_values));
}

}  // namespace plap
