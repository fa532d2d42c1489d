#ifndef ORBISTRUCT_ERRORS_HPP
#define ORBISTRUCT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbistruct {

/// Base class of everything this library throws on purpose.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input: degree mismatches, failed inclusions, malformed manifests.
class validation_error : public error {
public:
  using error::error;
};

/// A configured cap (group order, subset size) was exceeded.
class resource_error : public error {
public:
  using error::error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public error {
public:
  using error::error;
};

/// Cycle-notation or manifest syntax error. Carries the offending offset
/// (0-based) into the input text; the message quotes it 1-based.
class parse_error : public validation_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : validation_error(what + " (at position " + std::to_string(position + 1) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace orbistruct

#endif // ORBISTRUCT_ERRORS_HPP
