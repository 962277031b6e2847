#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stoc {

enum class errc {
  invalid_argument,
  parse,
  cap_exceeded,
  empty_result,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string message, std::string json_pointer = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        pointer_(std::move(json_pointer)) {}

  errc code() const noexcept { return code_; }

  // JSON pointer of the offending element, empty when nonapplicable.
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  errc code_;
  std::string pointer_;
};

[[noreturn]] inline void fail(errc code, const std::string& message,
                              const std::string& pointer = {}) {
  throw error(code, message, pointer);
}

}  // namespace stoc
