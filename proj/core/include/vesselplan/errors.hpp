#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vesselplan {

/// Malformed configuration text. `key()` names the offending key (or line).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config error [" + key + "]: " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// A value that violates a type invariant. `field()` names the field.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument("invalid " + field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Malformed data file (demand CSV, schedule CSV).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No feasible plan exists along the path the caller tried.
class InfeasibleError : public std::runtime_error {
 public:
  enum class Code { Unseedable, Unrepairable };

  InfeasibleError(Code code, int week, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + " at week " + std::to_string(week) + ": " +
                           detail),
        code_(code),
        week_(week) {}

  Code code() const noexcept { return code_; }
  int week() const noexcept { return week_; }

  static constexpr std::string_view code_name(Code c) {
    return c == Code::Unseedable ? "UNSEEDABLE" : "UNREPAIRABLE";
  }

 private:
  Code code_;
  int week_;
};

}  // namespace vesselplan
