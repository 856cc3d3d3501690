#pragma once

#include <stdexcept>
#include <string>

namespace fibercone {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct NotFiniteColength : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypothesisViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries the best candidate seen before the trial budget ran out.
struct TrialsExhausted : std::runtime_error {
  std::string detail;
  TrialsExhausted(const std::string& msg, std::string d)
      : std::runtime_error(msg), detail(std::move(d)) {}
};

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace fibercone
