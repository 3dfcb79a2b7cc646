#pragma once

#include <stdexcept>
#include <string>

namespace endocert {

/// Malformed textual input (cycle notation, polynomial grammar, matrix text).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input outside what the engine supports (n = 4, char 2, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cross-check between two independent computations disagreed.
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tri { False, True, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

}  // namespace endocert
