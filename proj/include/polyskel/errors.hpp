#ifndef POLYSKEL_ERRORS_HPP
#define POLYSKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyskel {

// An argument or input violates a documented precondition.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource limit was exceeded (state cap, solver size limit).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested target is provably unreachable under the given restrictions.
struct UnreachableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input file does not conform to the expected format.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyskel

#endif
