// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_CLI_EXPRESSION_HPP
#define PLAP_CLI_EXPRESSION_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plap::cli
{

class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t offset, const std::string& message);

  // Byte offset of the fault in the source text.
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Closed-form weight in the variable k.
///
/// Grammar: numbers (123, 4.5), k, + - * / ^, unary minus, parentheses.
/// ^ binds tightest and associates right, so -2^2 = -4 and 2^3^2 = 512.
class WeightExpression
{
public:
  struct Node;

  static WeightExpression parse(std::string_view text);

  double operator()(double k) const;
  const std::string& text() const noexcept { return text_; }

  WeightExpression(const WeightExpression&);
  WeightExpression& operator=(const WeightExpression&);
  WeightExpression(WeightExpression&&) noexcept;
  WeightExpression& operator=(WeightExpression&&) noexcept;
  ~WeightExpression();

private:
  WeightExpression(std::string text, std::shared_ptr<const Node> root);

  std::string text_;
  std::shared_ptr<const Node> root_;
};

double eval_weight_expr(std::string_view expr, int k);

}  // namespace plap::cli

#endif  // PLAP_CLI_EXPRESSION_HPP
