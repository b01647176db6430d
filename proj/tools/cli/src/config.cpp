// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/cli/config.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plap/cli/expression.hpp"
#include "plap/errors.hpp"

namespace plap::cli
{

namespace
{

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(std::string_view key, std::string_view message)
{
  throw ConfigError(std::string(key) + ": " + std::string(message));
}

void reject_unknown(const json& object, std::string_view prefix,
                    std::initializer_list<std::string_view> known)
{
  for (const auto& item : object.items())
  {
    bool found = false;
    for (std::string_view k : known)
    {
      found = found || item.key() == k;
    }
    if (!found)
    {
      fail(std::string(prefix) + item.key(), "unknown key");
    }
  }
}

const json& require(const json& object, const char* key)
{
  const auto it = object.find(key);
  if (it == object.end())
  {
    fail(key, "required key is missing");
  }
  return *it;
}

double as_number(const json& value, std::string_view key)
{
  if (!value.is_number())
  {
    fail(key, "expected a number");
  }
  return value.get<double>();
}

long long as_integer(const json& value, std::string_view key)
{
  if (!value.is_number_integer())
  {
    fail(key, "expected an integer");
  }
  return value.get<long long>();
}

std::string as_string(const json& value, std::string_view key)
{
  if (!value.is_string())
  {
    fail(key, "expected a string");
  }
  return value.get<std::string>();
}

WeightSpec parse_weight(const json& value, std::string_view key)
{
  if (!value.is_object())
  {
    fail(key, "expected an object with \"expr\" or \"values\"");
  }
  reject_unknown(value, std::string(key) + ".", {"expr", "values"});
  const bool has_expr = value.contains("expr");
  const bool has_values = value.contains("values");
  if (has_expr == has_values)
  {
    fail(key, "give exactly one of \"expr\" or \"values\"");
  }
  WeightSpec spec;
  if (has_expr)
  {
    const std::string sub = std::string(key) + ".expr";
    spec.expr = as_string(value["expr"], sub);
    try
    {
      WeightExpression::parse(*spec.expr);
    }
    catch (const ParseError& e)
    {
      fail(sub, e.what());
    }
  }
  else
  {
    const std::string sub = std::string(key) + ".values";
    const json& list = value["values"];
    if (!list.is_array())
    {
      fail(sub, "expected an array of numbers");
    }
    std::vector<double> values;
    for (std::size_t i = 0; i < list.size(); ++i)
    {
      values.push_back(as_number(list[i], sub + "[" + std::to_string(i) + "]"));
    }
    spec.values = std::move(values);
  }
  return spec;
}

InitialSpec parse_initial(const json& value)
{
  InitialSpec spec;
  if (value.is_string())
  {
    const std::string text = value.get<std::string>();
    if (text == "default")
    {
      return spec;
    }
    if (text == "ones")
    {
      spec.kind = InitialSpec::Kind::ones;
      return spec;
    }
    fail("initial", "expected \"default\", \"ones\" or {\"file\": path}");
  }
  if (value.is_object())
  {
    reject_unknown(value, "initial.", {"file"});
    spec.kind = InitialSpec::Kind::file;
    spec.path = as_string(require(value, "file"), "initial.file");
    return spec;
  }
  fail("initial", "expected \"default\", \"ones\" or {\"file\": path}");
}

StopRule parse_stop(const json& value)
{
  if (!value.is_object())
  {
    fail("stop", "expected an object");
  }
  reject_unknown(value, "stop.", {"sig_digits", "rel_tol", "max_iter", "residual_tol"});
  StopRule stop;
  if (value.contains("sig_digits"))
  {
    const long long digits = as_integer(value["sig_digits"], "stop.sig_digits");
    if (digits < 1 || digits > 17)
    {
      fail("stop.sig_digits", "must be between 1 and 17");
    }
    stop.sig_digits = static_cast<int>(digits);
  }
  if (value.contains("rel_tol"))
  {
    stop.rel_tol = as_number(value["rel_tol"], "stop.rel_tol");
    if (!(stop.rel_tol > 0.0))
    {
      fail("stop.rel_tol", "must be positive");
    }
  }
  if (value.contains("max_iter"))
  {
    const long long max_iter = as_integer(value["max_iter"], "stop.max_iter");
    if (max_iter < 1)
    {
      fail("stop.max_iter", "must be at least 1");
    }
    stop.max_iter = static_cast<std::size_t>(max_iter);
  }
  if (value.contains("residual_tol"))
  {
    stop.residual_tol = as_number(value["residual_tol"], "stop.residual_tol");
    if (!(stop.residual_tol > 0.0))
    {
      fail("stop.residual_tol", "must be positive");
    }
  }
  return stop;
}

}  // namespace

std::vector<double> WeightSpec::evaluate(BoundaryCase boundary, int n_max,
                                         std::string_view key) const
{
  const int first = boundary == BoundaryCase::ND ? 0 : 1;
  const std::size_t count = static_cast<std::size_t>(n_max - first + 1);
  std::vector<double> weights;
  std::string sub;
  if (expr)
  {
    sub = std::string(key) + ".expr";
    const auto f = WeightExpression::parse(*expr);
    for (int k = first; k <= n_max; ++k)
    {
      weights.push_back(f(k));
    }
  }
  else if (values)
  {
    sub = std::string(key) + ".values";
    if (values->size() != count)
    {
      fail(sub, "expected " + std::to_string(count) + " entries for " +
                    std::string(to_string(boundary)) + " with n_max = " + std::to_string(n_max) +
                    ", got " + std::to_string(values->size()));
    }
    weights = *values;
  }
  else
  {
    fail(key, "give exactly one of \"expr\" or \"values\"");
  }
  for (std::size_t i = 0; i < weights.size(); ++i)
  {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
    {
      fail(sub, "weight at k = " + std::to_string(first + static_cast<int>(i)) +
                    " is not a positive finite number");
    }
  }
  return weights;
}

Problem RunConfig::problem() const
{
  return Problem(boundary, p, mu.evaluate(boundary, n_max, "mu"),
                 nu.evaluate(boundary, n_max, "nu"));
}

std::string_view to_string(Method method)
{
  switch (method)
  {
  case Method::approx: return "approx";
  case Method::inverse: return "inverse";
  case Method::truncated: return "truncated";
  case Method::oracle: return "oracle";
  case Method::all: return "all";
  }
  return "all";
}

std::string_view to_string(OutputFormat format)
{
  switch (format)
  {
  case OutputFormat::csv: return "csv";
  case OutputFormat::tsv: return "tsv";
  case OutputFormat::pretty: return "pretty";
  }
  return "csv";
}

Method parse_method(std::string_view text)
{
  for (Method m : {Method::approx, Method::inverse, Method::truncated, Method::oracle, Method::all})
  {
    if (text == to_string(m))
    {
      return m;
    }
  }
  fail("method", "expected one of approx, inverse, truncated, oracle, all; got \"" +
                     std::string(text) + "\"");
}

OutputFormat parse_output_format(std::string_view text)
{
  for (OutputFormat f : {OutputFormat::csv, OutputFormat::tsv, OutputFormat::pretty})
  {
    if (text == to_string(f))
    {
      return f;
    }
  }
  fail("output_format", "expected one of csv, tsv, pretty; got \"" + std::string(text) + "\"");
}

RunConfig parse_config(std::string_view text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error& e)
  {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object())
  {
    throw ConfigError("config: expected a JSON object at top level");
  }
  reject_unknown(doc, "", {"case", "p", "n_max", "mu", "nu", "method", "initial", "stop",
                           "output_format", "truncated_steps"});

  RunConfig config;
  if (doc.contains("case"))
  {
    try
    {
      config.boundary = parse_boundary_case(as_string(doc["case"], "case"));
    }
    catch (const DomainError&)
    {
      fail("case", "expected \"ND\" or \"DN\"");
    }
  }

  config.p = as_number(require(doc, "p"), "p");
  if (!(config.p > 1.0) || !std::isfinite(config.p))
  {
    throw ConfigError("p must exceed 1");
  }

  const long long n_max = as_integer(require(doc, "n_max"), "n_max");
  if (n_max < 0 || n_max > 1000000)
  {
    fail("n_max", "must be an integer in [0, 1000000]");
  }
  config.n_max = static_cast<int>(n_max);
  if (config.boundary == BoundaryCase::DN && config.n_max < 1)
  {
    fail("n_max", "DN problems need n_max >= 1");
  }

  config.mu = parse_weight(require(doc, "mu"), "mu");
  config.nu = parse_weight(require(doc, "nu"), "nu");
  config.mu.evaluate(config.boundary, config.n_max, "mu");
  config.nu.evaluate(config.boundary, config.n_max, "nu");

  if (doc.contains("method"))
  {
    config.method = parse_method(as_string(doc["method"], "method"));
  }
  if (doc.contains("initial"))
  {
    config.initial = parse_initial(doc["initial"]);
  }
  if (doc.contains("stop"))
  {
    config.stop = parse_stop(doc["stop"]);
  }
  if (doc.contains("output_format"))
  {
    config.output_format = parse_output_format(as_string(doc["output_format"], "output_format"));
  }
  if (doc.contains("truncated_steps"))
  {
    const long long steps = as_integer(doc["truncated_steps"], "truncated_steps");
    if (steps < 1 || steps > 100000)
    {
      fail("truncated_steps", "must be an integer in [1, 100000]");
    }
    config.truncated_steps = static_cast<int>(steps);
  }
  return config;
}

RunConfig load_config(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ConfigError("config: cannot open \"" + path + "\"");
  }
  std::ostringstream text;
  text << in.rdbuf();
  RunConfig config = parse_config(text.str());
  if (config.initial.kind == InitialSpec::Kind::file)
  {
    const std::filesystem::path initial(config.initial.path);
    if (initial.is_relative())
    {
      config.initial.path = (std::filesystem::path(path).parent_path() / initial).string();
    }
  }
  return config;
}

std::string to_config_text(const RunConfig& config)
{
  ordered_json doc;
  doc["case"] = std::string(to_string(config.boundary));
  doc["p"] = config.p;
  doc["n_max"] = config.n_max;
  for (const auto& [key, spec] : {std::pair{"mu", &config.mu}, std::pair{"nu", &config.nu}})
  {
    ordered_json weight = ordered_json::object();
    if (spec->expr)
    {
      weight["expr"] = *spec->expr;
    }
    else if (spec->values)
    {
      weight["values"] = *spec->values;
    }
    doc[key] = weight;
  }
  doc["method"] = std::string(to_string(config.method));
  switch (config.initial.kind)
  {
  case InitialSpec::Kind::default_initial: doc["initial"] = "default"; break;
  case InitialSpec::Kind::ones: doc["initial"] = "ones"; break;
  case InitialSpec::Kind::file: doc["initial"] = {{"file", config.initial.path}}; break;
  }
  doc["stop"] = {{"sig_digits", config.stop.sig_digits},
                 {"rel_tol", config.stop.rel_tol},
                 {"max_iter", config.stop.max_iter},
                 {"residual_tol", config.stop.residual_tol}};
  doc["output_format"] = std::string(to_string(config.output_format));
  doc["truncated_steps"] = config.truncated_steps;
  return doc.dump(2) + "\n";
}

std::vector<double> read_function_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("initial.file: cannot open \"" + path + "\"");
  }
  std::vector<double> values;
  std::string token;
  char c;
  auto flush = [&]
  {
    if (token.empty())
    {
      return;
    }
    std::size_t used = 0;
    double x = 0.0;
    try
    {
      x = std::stod(token, &used);
    }
    catch (const std::exception&)
    {
      used = 0;
    }
    if (used != token.size())
    {
      throw ConfigError("initial.file: \"" + token + "\" is not a number");
    }
    values.push_back(x);
    token.clear();
  };
  while (in.get(c))
  {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
    {
      flush();
    }
    else
    {
      token += c;
    }
  }
  flush();
  return values;
}

}  // namespace plap::cli
