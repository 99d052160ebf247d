#pragma once

#include <stdexcept>
#include <string>

namespace meetup {

/// Malformed input file (carries a line number where applicable).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid data (dangling edge endpoints, bad weights, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No meetup node is reachable by every moving object.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or inconsistent configuration (credentials, option combinations).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Remote venue service failure (HTTP error, bad payload, rate limit).
class RemoteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meetup
