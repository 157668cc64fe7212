#include "hyper/error.hpp"

namespace hyper {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::SystemMismatch: return "system-mismatch";
    case ErrorKind::ZeroDivisor: return "zero-divisor";
    case ErrorKind::Sector: return "sector";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Superluminal: return "superluminal";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::DegenerateSpacing: return "degenerate-spacing";
  }
  return "unknown";
}

}  // namespace hyper
