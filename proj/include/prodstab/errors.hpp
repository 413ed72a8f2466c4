#ifndef PRODSTAB_ERRORS_HPP
#define PRODSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prodstab {

// Thrown when an exact computation is refused because the input exceeds a
// documented size cap (graph enumeration order, factorization order, group
// element streaming). Callers that want a partial answer must shrink the
// input; nothing in the library degrades to sampling.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph text (edge list or graph6).
class GraphFormatError : public std::runtime_error {
 public:
  explicit GraphFormatError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace prodstab

#endif
