#pragma once

#include <stdexcept>
#include <string>

namespace liealc {

// Malformed or out-of-domain input: bad rational syntax, wrong dimension,
// point outside the alcove, invalid simple type, ...
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed query that falls outside what the toolkit is able to decide
// (e.g. an obstruction question for a structure group we have no criterion for).
class ScopeError : public std::domain_error {
  public:
    explicit ScopeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace liealc
