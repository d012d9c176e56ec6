#ifndef RAMDEPTH_ERRORS_HPP_
#define RAMDEPTH_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace ramdepth {

// Every failure carries a stable machine-readable code ("NotAGroup",
// "NonIntegerConductor", ...) next to the human-readable message, so tests
// and the CLI can dispatch on the code without parsing prose.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, const char* code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace ramdepth

#endif
