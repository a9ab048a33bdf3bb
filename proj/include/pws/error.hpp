#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pws {

/// Positive integers and shift amounts. ℕ starts at 1; shifts start at 0.
using Nat = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (e.g. gap_bound of a finite set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (lcm cap, horizon cap, stage ceiling) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Query outside the known part of a finite window.
class HorizonError : public Error {
 public:
  using Error::Error;
};

/// A set was expected to belong to a countable algebra but does not.
class NotInAlgebraError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pws
