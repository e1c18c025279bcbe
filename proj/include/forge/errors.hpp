#pragma once

#include <stdexcept>
#include <string>

namespace forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed data, violated preconditions, wrong kind of element.
class InputError : public Error {
 public:
  using Error::Error;
};

// A finite computation ran out of room (radius, budget) before it could certify.
class LimitError : public Error {
 public:
  using Error::Error;
};

#define FORGE_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                             \
   public:                                                               \
    explicit Name(const std::string& what) : Base(#Name ": " + what) {}  \
  };

FORGE_DEFINE_ERROR(DegenerateSegment, InputError)
FORGE_DEFINE_ERROR(IllegalPortrait, InputError)
FORGE_DEFINE_ERROR(NotInStabilizer, InputError)
FORGE_DEFINE_ERROR(NotTranslatedSegment, InputError)
FORGE_DEFINE_ERROR(RepellingFixedEnd, InputError)
FORGE_DEFINE_ERROR(RadiusMismatch, InputError)
FORGE_DEFINE_ERROR(NotVertexTransitive, InputError)
FORGE_DEFINE_ERROR(NotHyperbolic, InputError)
FORGE_DEFINE_ERROR(CacheInvalid, InputError)

FORGE_DEFINE_ERROR(InsufficientRadius, LimitError)
FORGE_DEFINE_ERROR(BudgetExhausted, LimitError)
FORGE_DEFINE_ERROR(OutOfBudget, LimitError)

#undef FORGE_DEFINE_ERROR

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("ParseError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace forge
