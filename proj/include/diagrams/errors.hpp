#ifndef DIAGRAMS_ERRORS_HPP_
#define DIAGRAMS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diagrams {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A rewriting step does not match the word it is applied to.
  class NotApplicable : public Error {
   public:
    using Error::Error;
  };

  // Operands live over different presentations or have incompatible
  // boundary words.
  class MismatchError : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of an operation does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace diagrams

#endif  // DIAGRAMS_ERRORS_HPP_
