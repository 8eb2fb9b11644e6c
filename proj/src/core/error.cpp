#include "kakeyalab/error.hpp"

namespace kl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::UnknownParameter: return "unknown-parameter";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::NonHorizontal: return "non-horizontal";
    case ErrorKind::Transversality: return "transversality";
    case ErrorKind::Pipeline: return "pipeline";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

}  // namespace kl
