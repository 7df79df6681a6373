#pragma once

#include <stdexcept>
#include <string>

namespace hoctop {

/// Problems with user-supplied input: malformed files, too few points,
/// degenerate clouds. The CLI maps these to exit status 1.
class InputError : public std::runtime_error {
 public:
  enum class Kind { TooFewPoints, AllCollinear, NonFinite, Malformed, InvalidArgument };

  InputError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A predicate or construction was asked about three collinear points.
class DegenerateTriangle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant did not hold. The CLI maps these to exit status 2.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void expects(bool condition, const char* message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace hoctop
