#ifndef RSM_ERRORS_HPP_
#define RSM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsm {

// Base class for everything thrown by this library. The CLI maps all of
// these to exit code 2 (bad input) unless a verb documents otherwise.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLabelError : Error {
  explicit UnknownLabelError(const std::string& label)
      : Error("unknown label: \"" + label + "\"") {}
};

struct DuplicateLabelError : Error {
  explicit DuplicateLabelError(const std::string& label)
      : Error("duplicate label in universe: \"" + label + "\"") {}
};

struct UniverseMismatchError : Error {
  UniverseMismatchError() : Error("operands are defined over different universes") {}
};

struct UniverseTooLargeError : Error {
  UniverseTooLargeError(std::size_t size, std::size_t cap)
      : Error("universe has " + std::to_string(size) +
              " elements, above the cap of " + std::to_string(cap)) {}
};

// Raised by json_io on malformed files.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace rsm

#endif  // RSM_ERRORS_HPP_
