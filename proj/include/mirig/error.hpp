#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mirig {

  // Base of every error thrown by the library. The CLI maps these to exit
  // status 1; usage problems are handled before the library is reached.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An input violates an operation's precondition (empty word, invalid
  // triple, mismatched parameters, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // The request is well-formed but exceeds what the implementation can
  // enumerate. The message names the bound.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept {
      return offset_;
    }

   private:
    std::size_t offset_;
  };

}  // namespace mirig
