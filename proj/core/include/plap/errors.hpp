// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PLAP_ERRORS_HPP
#define PLAP_ERRORS_HPP

#include <stdexcept>

namespace plap
{

// Argument outside the mathematical domain of an operation (p <= 1,
// non-positive weights or iterates, wrong exponent for a p=2 routine).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Problem too large for an enumeration or brute-force routine.
class SizeError : public std::length_error
{
public:
  using std::length_error::length_error;
};

// A brute-force oracle could not bracket its root. Signals a bug.
class OracleFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace plap

#endif  // PLAP_ERRORS_HPP
