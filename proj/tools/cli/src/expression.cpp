// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include "plap/cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

namespace plap::cli
{

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

struct WeightExpression::Node
{
  enum class Kind
  {
    number,
    variable,
    negate,
    add,
    subtract,
    multiply,
    divide,
    power
  };

  Kind kind = Kind::number;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double k) const
  {
    switch (kind)
    {
    case Kind::number: return value;
    case Kind::variable: return k;
    case Kind::negate: return -lhs->eval(k);
    case Kind::add: return lhs->eval(k) + rhs->eval(k);
    case Kind::subtract: return lhs->eval(k) - rhs->eval(k);
    case Kind::multiply: return lhs->eval(k) * rhs->eval(k);
    case Kind::divide: return lhs->eval(k) / rhs->eval(k);
    case Kind::power: return std::pow(lhs->eval(k), rhs->eval(k));
    }
    return 0.0;
  }
};

namespace
{

using Node = WeightExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr lhs, NodePtr rhs = nullptr)
{
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

// Recursive descent over
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' unary)?
//   atom  := number | 'k' | '(' expr ')'
class Parser
{
public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse()
  {
    NodePtr root = expr();
    skip_space();
    if (pos_ < text_.size())
    {
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return root;
  }

private:
  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
    {
      ++pos_;
    }
  }

  bool accept(char c)
  {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c)
    {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr()
  {
    NodePtr lhs = term();
    for (;;)
    {
      if (accept('+'))
      {
        lhs = make(Node::Kind::add, lhs, term());
      }
      else if (accept('-'))
      {
        lhs = make(Node::Kind::subtract, lhs, term());
      }
      else
      {
        return lhs;
      }
    }
  }

  NodePtr term()
  {
    NodePtr lhs = unary();
    for (;;)
    {
      if (accept('*'))
      {
        lhs = make(Node::Kind::multiply, lhs, unary());
      }
      else if (accept('/'))
      {
        lhs = make(Node::Kind::divide, lhs, unary());
      }
      else
      {
        return lhs;
      }
    }
  }

  NodePtr unary()
  {
    if (accept('-'))
    {
      return make(Node::Kind::negate, unary());
    }
    if (accept('+'))
    {
      return unary();
    }
    return power();
  }

  NodePtr power()
  {
    NodePtr base = atom();
    if (accept('^'))
    {
      return make(Node::Kind::power, base, unary());
    }
    return base;
  }

  NodePtr atom()
  {
    skip_space();
    if (pos_ >= text_.size())
    {
      throw ParseError(pos_, "unexpected end of expression");
    }
    const char c = text_[pos_];
    if (c == '(')
    {
      const std::size_t open = pos_++;
      NodePtr inner = expr();
      if (!accept(')'))
      {
        skip_space();
        throw ParseError(pos_, "missing ')' for '(' at offset " + std::to_string(open));
      }
      return inner;
    }
    if (c == 'k')
    {
      ++pos_;
      return make(Node::Kind::variable, nullptr);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
    {
      return number();
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  NodePtr number()
  {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
    {
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '.')
    {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      {
        ++pos_;
      }
    }
    const std::string_view digits = text_.substr(start, pos_ - start);
    if (digits == ".")
    {
      throw ParseError(start, "malformed number");
    }
    auto node = std::make_shared<Node>();
    std::from_chars(digits.data(), digits.data() + digits.size(), node->value);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WeightExpression::WeightExpression(std::string text, std::shared_ptr<const Node> root)
    : text_(std::move(text)), root_(std::move(root))
{
}

WeightExpression::WeightExpression(const WeightExpression&) = default;
WeightExpression& WeightExpression::operator=(const WeightExpression&) = default;
WeightExpression::WeightExpression(WeightExpression&&) noexcept = default;
WeightExpression& WeightExpression::operator=(WeightExpression&&) noexcept = default;
WeightExpression::~WeightExpression() = default;

WeightExpression WeightExpression::parse(std::string_view text)
{
  return WeightExpression(std::string(text), Parser(text).parse());
}

double WeightExpression::operator()(double k) const { return root_->eval(k); }

double eval_weight_expr(std::string_view expr, int k)
{
  return WeightExpression::parse(expr)(static_cast<double>(k));
}

}  // namespace plap::cli
