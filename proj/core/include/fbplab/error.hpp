// Exception types shared by every fbplab component.

#ifndef FBPLAB_ERROR_HPP_
#define FBPLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbplab {

  // Thrown when an input violates an operation's precondition.
  class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Thrown when an enumeration or closure would exceed a configured cap.
  class LimitExceeded : public std::runtime_error {
   public:
    LimitExceeded(std::string const& what_, std::size_t requested, std::size_t cap)
        : std::runtime_error(what_ + " (requested " + std::to_string(requested)
                             + ", cap " + std::to_string(cap) + ")"),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept {
      return requested_;
    }
    std::size_t cap() const noexcept {
      return cap_;
    }

   private:
    std::size_t requested_;
    std::size_t cap_;
  };

  // A substitution (word- or element-valued) lacks an image for a variable.
  class UndefinedVariable : public InvalidInput {
   public:
    explicit UndefinedVariable(std::string variable)
        : InvalidInput("no image for variable '" + variable + "'"),
          variable_(std::move(variable)) {}

    std::string const& variable() const noexcept {
      return variable_;
    }

   private:
    std::string variable_;
  };

  // Text in one of the fbplab file formats could not be parsed.
  class ParseError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

}  // namespace fbplab

#endif  // FBPLAB_ERROR_HPP_
