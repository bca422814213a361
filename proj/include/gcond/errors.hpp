#pragma once

#include <stdexcept>
#include <string>

namespace gcond {

// Enumeration refused because the instance exceeds the configured cap.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A theorem hypothesis does not hold for the given instance (wrong parity,
// marked vertices out of cyclic order, M(H) != 1, ...). Kept distinct from
// an identity failure so searches can skip inapplicable instances.
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency breach: something a proved lemma rules out happened
// anyway (e.g. an alternating cycle during crossing resolution).
struct IntegrityError : std::runtime_error {
  explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph file could not be read.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gcond
