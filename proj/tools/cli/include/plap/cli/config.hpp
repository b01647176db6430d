// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_CLI_CONFIG_HPP
#define PLAP_CLI_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plap/problem.hpp"
#include "plap/result.hpp"

namespace plap::cli
{

// Invalid configuration. The message starts with the offending key path.
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Exactly one of values / expr is set.
struct WeightSpec
{
  std::optional<std::vector<double>> values;
  std::optional<std::string> expr;

  // Weights over the index set (k = 0..N for ND, 1..N for DN). `key` names
  // the weight entry in error messages.
  std::vector<double> evaluate(BoundaryCase boundary, int n_max, std::string_view key) const;

  bool operator==(const WeightSpec&) const = default;
};

enum class Method
{
  approx,
  inverse,
  truncated,
  oracle,
  all
};

enum class OutputFormat
{
  csv,
  tsv,
  pretty
};

struct InitialSpec
{
  enum class Kind
  {
    default_initial,
    ones,
    file
  };

  Kind kind = Kind::default_initial;
  std::string path;  // file only

  bool operator==(const InitialSpec&) const = default;
};

struct RunConfig
{
  BoundaryCase boundary = BoundaryCase::ND;
  double p = 0.0;
  int n_max = 0;
  WeightSpec mu;
  WeightSpec nu;
  Method method = Method::all;
  InitialSpec initial;
  StopRule stop;
  OutputFormat output_format = OutputFormat::csv;
  int truncated_steps = 5;

  Problem problem() const;

  bool operator==(const RunConfig&) const = default;
};

std::string_view to_string(Method method);
std::string_view to_string(OutputFormat format);
Method parse_method(std::string_view text);
OutputFormat parse_output_format(std::string_view text);

/// Parses and validates a JSON run configuration.
///
/// Keys: case, p, n_max, mu {expr | values}, nu {expr | values}, method,
/// initial ("default", "ones" or {"file": path}), stop {sig_digits, rel_tol,
/// max_iter}, output_format, truncated_steps. p, n_max, mu and nu are
/// required. Throws ConfigError naming the key on any violation.
RunConfig parse_config(std::string_view text);

// Reads a config file; a relative initial file path is resolved against the
// directory of the config file.
RunConfig load_config(const std::string& path);

// Canonical JSON text; parse_config(to_config_text(c)) == c.
std::string to_config_text(const RunConfig& config);

// Whitespace- or comma-separated numbers.
std::vector<double> read_function_file(const std::string& path);

}  // namespace plap::cli

#endif  // PLAP_CLI_CONFIG_HPP
