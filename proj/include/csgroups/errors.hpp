#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csg {

  // Base class for every error the engine raises on bad input or exhausted
  // limits. Programming errors still use assert.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DegreeMismatch : public Error {
   public:
    using Error::Error;
  };

  class InvalidPermutation : public Error {
   public:
    using Error::Error;
  };

  class OrderCapExceeded : public Error {
   public:
    OrderCapExceeded(std::size_t cap, std::size_t partial)
        : Error("order cap exceeded: closure reached " + std::to_string(partial)
                + " elements (cap " + std::to_string(cap) + ")"),
          cap_(cap),
          partial_(partial) {}

    std::size_t cap() const noexcept {
      return cap_;
    }
    std::size_t partial_count() const noexcept {
      return partial_;
    }

   private:
    std::size_t cap_;
    std::size_t partial_;
  };

  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  class ActionError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  // A structural enumeration (normal subgroups, Hall search) hit its
  // configured limit. Callers turn this into an "incomplete" verdict.
  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

  class NotNilpotent : public Error {
   public:
    using Error::Error;
  };

}  // namespace csg
