#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclojones {

// Precondition violations on arguments (bad index, zero polynomial, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arithmetic between a t-polynomial and an A-polynomial.
class TagError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A theorem-backed identity failed to hold. Always an implementation bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InexactDivisionError : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

// Bracket <-> Jones conversion met an exponent not divisible by 4.
class ConversionError : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

// A bracket level was asked for an index outside its computed window.
class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclojones
