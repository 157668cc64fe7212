#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyper {

enum class ErrorKind {
  InvalidParameter,
  SystemMismatch,
  ZeroDivisor,
  Sector,
  Overflow,
  Superluminal,
  Domain,
  Singularity,
  DegenerateSpacing,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; kind() is stable
/// and drives the CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyper
