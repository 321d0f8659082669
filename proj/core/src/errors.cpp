#include "freiman/errors.hpp"

#include <sstream>

namespace freiman {

namespace {

std::string limit_message(std::uint64_t required, std::uint64_t cap) {
  std::ostringstream os;
  os << "enumeration needs " << required << " ideals, above the cap of " << cap;
  return os.str();
}

std::string parse_message(int line, const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ": " << message;
  return os.str();
}

}  // namespace

ResourceLimit::ResourceLimit(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error(limit_message(required, cap)),
      required_(required),
      cap_(cap) {}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(parse_message(line, message)), line_(line) {}

}  // namespace freiman
