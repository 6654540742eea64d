#pragma once

#include <stdexcept>
#include <string>

namespace g2calc {

// Every failure the engine can diagnose (bad input, unusable model data,
// impossible operation) is thrown as this type.  Anything else escaping a
// public entry point is a programming error.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
};

[[noreturn]] inline void fail(const std::string& message) { throw Error(message); }

}  // namespace g2calc
