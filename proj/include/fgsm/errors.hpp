#pragma once

#include <stdexcept>
#include <string>

namespace fgsm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph construction and edge-set validation.
struct InvalidVertex : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct InvalidEdge : Error { using Error::Error; };

// Path application.
struct NotAlternating : Error { using Error::Error; };
struct CapacityExhausted : Error { using Error::Error; };

// Phase machinery.
struct PhaseOnMaximum : Error { using Error::Error; };

// Oracles.
struct TooLarge : Error { using Error::Error; };
struct NotLarger : Error { using Error::Error; };
struct InvalidMatching : Error { using Error::Error; };

// Applications.
struct UnsaturatableU : Error { using Error::Error; };

// Text formats. Carries the 1-based line the problem was found on.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

}  // namespace fgsm
