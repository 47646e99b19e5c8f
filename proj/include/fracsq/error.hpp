#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracsq {

/// Base class for all errors raised by the library. `module()` names the
/// subsystem that rejected the request, e.g. "pattern" or "grid_oracle".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("pattern", line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A computation would exceed the configured cell budget.
class ResourceError : public Error {
 public:
  ResourceError(std::string module, std::uint64_t required, std::uint64_t limit)
      : Error(std::move(module), "cell budget exceeded: requires " + std::to_string(required) +
                                     " cells, limit is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

}  // namespace fracsq
