#pragma once

#include <stdexcept>
#include <string>

namespace stacky {

// A classifier was invoked outside its stated hypothesis (e.g. rd < 4).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vector is not an integer combination of the given lattice basis.
struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A standing hypothesis of a theorem-backed operation fails.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The congruence solver was handed zero constraints.
struct EmptySystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The character-lattice pullback failed to be injective; this contradicts
// a proven statement and is treated as an internal-consistency fault.
struct InjectivityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed sweep specification file.
struct SweepSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stacky
