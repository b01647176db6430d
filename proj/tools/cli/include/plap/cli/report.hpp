// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_CLI_REPORT_HPP
#define PLAP_CLI_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "plap/cli/config.hpp"

namespace plap::cli
{

inline constexpr int kExitConverged = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudgetExhausted = 2;

// Numeric body plus '#' summary lines.
struct Table
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> summary;

  void write(std::ostream& out, OutputFormat format) const;
};

// %.6g, or %.17g when full precision is requested.
std::string format_value(double x, bool full_precision);

/// Runs the configured method(s) and writes the convergence table to `out`.
///
/// Column layouts: inverse "k,z_k"; approx "n,inv_delta,inv_delta_prime,
/// inv_delta_bar" with row n holding the bounds of f^(n+1); all joins both as
/// "n,z_n,inv_delta,inv_delta_prime,inv_delta_bar"; truncated
/// "n,inv_delta_prime,inv_delta_bar" for n = 1..truncated_steps; oracle a
/// single "lambda" row. Diagnostics go to `err`. Returns kExitConverged,
/// kExitBudgetExhausted if an iterative method hit max_iter, or
/// kExitInputError.
int run_and_emit(const RunConfig& config, std::ostream& out, std::ostream& err,
                 bool full_precision = false);

}  // namespace plap::cli

#endif  // PLAP_CLI_REPORT_HPP
