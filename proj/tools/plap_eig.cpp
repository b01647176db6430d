// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

// plap-eig run <config-file> [--method M] [--output csv|tsv|pretty]
//              [--full-precision] [--out FILE]

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "plap/cli/config.hpp"
#include "plap/cli/report.hpp"

using namespace plap::cli;

int main(int argc, char** argv)
{
  CLI::App app{"Principal eigenvalue of the discrete weighted p-Laplacian", "plap-eig"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "plap-eig 0.1.0");

  std::string config_path;
  std::optional<std::string> method;
  std::optional<std::string> output;
  std::string out_path;
  bool full_precision = false;

  CLI::App* run = app.add_subcommand("run", "Solve the problem described by a JSON config file");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--method", method, "approx, inverse, truncated, oracle or all");
  run->add_option("--output", output, "csv, tsv or pretty");
  run->add_flag("--full-precision", full_precision, "Print 17 significant digits");
  run->add_option("--out", out_path, "Write the table to FILE instead of stdout");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    return app.exit(e) == 0 ? 0 : kExitInputError;
  }

  RunConfig config;
  try
  {
    config = load_config(config_path);
    if (method)
    {
      config.method = parse_method(*method);
    }
    if (output)
    {
      config.output_format = parse_output_format(*output);
    }
  }
  catch (const ConfigError& e)
  {
    std::cerr << "plap-eig: " << e.what() << '\n';
    return kExitInputError;
  }

  if (out_path.empty())
  {
    return run_and_emit(config, std::cout, std::cerr, full_precision);
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file)
  {
    std::cerr << "plap-eig: cannot write \"" << out_path << "\"\n";
    return kExitInputError;
  }
  return run_and_emit(config, file, std::cerr, full_precision);
}
