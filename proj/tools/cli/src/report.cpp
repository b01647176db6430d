// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "plap/approx.hpp"
#include "plap/chain.hpp"
#include "plap/errors.hpp"
#include "plap/inverse.hpp"
#include "plap/oracle.hpp"
#include "plap/p_operator.hpp"

namespace plap::cli
{

std::string format_value(double x, bool full_precision)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6g", x);
  return buf;
}

void Table::write(std::ostream& out, OutputFormat format) const
{
  if (format == OutputFormat::pretty)
  {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c)
    {
      width[c] = header[c].size();
      for (const auto& row : rows)
      {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells)
    {
      std::string text;
      for (std::size_t c = 0; c < cells.size(); ++c)
      {
        text += (c ? "  " : "") + std::string(width[c] - cells[c].size(), ' ') + cells[c];
      }
      text.erase(text.find_last_not_of(' ') + 1);
      out << text << '\n';
    };
    line(header);
    for (const auto& row : rows)
    {
      line(row);
    }
  }
  else
  {
    const char sep = format == OutputFormat::tsv ? '\t' : ',';
    auto line = [&](const std::vector<std::string>& cells)
    {
      for (std::size_t c = 0; c < cells.size(); ++c)
      {
        out << (c ? std::string(1, sep) : "") << cells[c];
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows)
    {
      line(row);
    }
  }
  for (const auto& s : summary)
  {
    out << "# " << s << '\n';
  }
}

namespace
{

Fn initial_function(const RunConfig& config, const Problem& problem)
{
  switch (config.initial.kind)
  {
  case InitialSpec::Kind::ones: return constant_function(problem);
  case InitialSpec::Kind::file:
  {
    Fn f = read_function_file(config.initial.path);
    if (f.size() != problem.size())
    {
      throw ConfigError("initial.file: expected " + std::to_string(problem.size()) +
                        " values, got " + std::to_string(f.size()));
    }
    if (!std::all_of(f.begin(), f.end(), [](double x) { return x > 0.0 && std::isfinite(x); }))
    {
      throw ConfigError("initial.file: values must be positive and finite");
    }
    return f;
  }
  case InitialSpec::Kind::default_initial: break;
  }
  return default_initial(problem);
}

class Emitter
{
public:
  Emitter(const RunConfig& config, bool full_precision)
      : config_(config), problem_(config.problem()), full_(full_precision)
  {
  }

  Table run()
  {
    switch (config_.method)
    {
    case Method::approx: return approx();
    case Method::inverse: return inverse();
    case Method::truncated: return truncated();
    case Method::oracle: return oracle();
    case Method::all: return joint();
    }
    return joint();
  }

  bool exhausted() const { return exhausted_; }

private:
  std::string num(double x) const { return format_value(x, full_); }

  std::string summary(std::string_view method, const EigenResult& r)
  {
    exhausted_ = exhausted_ || !r.converged;
    return "method=" + std::string(method) + " lambda=" + num(r.lambda) +
           " iterations=" + std::to_string(r.iterations) + " residual=" + num(r.residual) +
           " sigma_p=" + num(sigma_p(problem_)) + " converged=" + (r.converged ? "true" : "false");
  }

  Table approx()
  {
    const auto r = run_approximation(problem_, initial_function(config_, problem_), config_.stop);
    Table t{{"n", "inv_delta", "inv_delta_prime", "inv_delta_bar"}, {}, {}};
    for (std::size_t n = 0; n < r.lower_history.size(); ++n)
    {
      t.rows.push_back({std::to_string(n), num(r.lower_history[n]), num(r.upper_history[n]),
                        num(r.estimate_history[n])});
    }
    t.summary.push_back(summary("approx", r));
    return t;
  }

  Table inverse()
  {
    const auto r =
        run_inverse_iteration(problem_, initial_function(config_, problem_), config_.stop);
    Table t{{"k", "z_k"}, {}, {}};
    for (std::size_t k = 0; k < r.upper_history.size(); ++k)
    {
      t.rows.push_back({std::to_string(k), num(r.upper_history[k])});
    }
    t.summary.push_back(summary("inverse", r));
    return t;
  }

  Table joint()
  {
    const Fn initial = initial_function(config_, problem_);
    const auto a = run_approximation(problem_, initial, config_.stop);
    const auto v = run_inverse_iteration(problem_, initial, config_.stop);
    Table t{{"n", "z_n", "inv_delta", "inv_delta_prime", "inv_delta_bar"}, {}, {}};
    const std::size_t rows = std::max(a.lower_history.size(), v.upper_history.size());
    for (std::size_t n = 0; n < rows; ++n)
    {
      std::vector<std::string> row{std::to_string(n), "", "", "", ""};
      if (n < v.upper_history.size())
      {
        row[1] = num(v.upper_history[n]);
      }
      if (n < a.lower_history.size())
      {
        row[2] = num(a.lower_history[n]);
        row[3] = num(a.upper_history[n]);
        row[4] = num(a.estimate_history[n]);
      }
      t.rows.push_back(std::move(row));
    }
    t.summary.push_back(summary("approx", a));
    t.summary.push_back(summary("inverse", v));
    return t;
  }

  Table truncated()
  {
    const auto history = truncated_family_history(problem_, config_.truncated_steps);
    Table t{{"n", "inv_delta_prime", "inv_delta_bar"}, {}, {}};
    for (std::size_t n = 0; n < history.size(); ++n)
    {
      t.rows.push_back({std::to_string(n + 1), num(1.0 / history[n].delta_prime),
                        num(1.0 / history[n].delta_bar)});
    }
    t.summary.push_back("method=truncated steps=" + std::to_string(history.size()) +
                        " lambda_upper=" + num(1.0 / history.back().delta_bar) +
                        " sigma_p=" + num(sigma_p(problem_)));
    return t;
  }

  Table oracle()
  {
    const double lambda = principal_eigenvalue_bruteforce(problem_);
    Table t{{"lambda"}, {{num(lambda)}}, {}};
    t.summary.push_back("method=oracle lambda=" + num(lambda) +
                        " sigma_p=" + num(sigma_p(problem_)));
    return t;
  }

  const RunConfig& config_;
  Problem problem_;
  bool full_;
  bool exhausted_ = false;
};

}  // namespace

int run_and_emit(const RunConfig& config, std::ostream& out, std::ostream& err,
                 bool full_precision)
{
  try
  {
    Emitter emitter(config, full_precision);
    const Table table = emitter.run();
    table.write(out, config.output_format);
    if (emitter.exhausted())
    {
      err << "plap-eig: iteration budget of " << config.stop.max_iter
          << " exhausted before the stop rule was met\n";
      return kExitBudgetExhausted;
    }
    return kExitConverged;
  }
  catch (const ConfigError& e)
  {
    err << "plap-eig: " << e.what() << '\n';
  }
  catch (const SizeError& e)
  {
    err << "plap-eig: " << e.what() << '\n';
  }
  catch (const DomainError& e)
  {
    err << "plap-eig: " << e.what() << '\n';
  }
  catch (const OracleFailure& e)
  {
    err << "plap-eig: " << e.what() << '\n';
  }
  catch (const std::invalid_argument& e)
  {
    err << "plap-eig: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace plap::cli
