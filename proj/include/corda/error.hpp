#pragma once
#include <stdexcept>
#include <string>

namespace corda {

enum class Status {
  ok = 0,
  invalid_argument = 1,
  unsupported = 2,
  budget_exhausted = 3,
  parse_error = 4,
  internal = 5,
};

const char* status_name(Status s);

// All library failures surface as Error; the status survives the C boundary.
class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& what) : std::runtime_error(what), status_(s) {}
  Status status() const { return status_; }

private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& what) { throw Error(s, what); }
[[noreturn]] inline void fail_arg(const std::string& what) {
  throw Error(Status::invalid_argument, what);
}

} // namespace corda
