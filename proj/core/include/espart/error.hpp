#pragma once

#include <stdexcept>
#include <string>

namespace espart {

// Failure classes. Every contract violation in the library throws an
// espart::error carrying one of these, so callers (and the CLI exit status)
// can tell them apart.
enum class errc {
  undefined,           // pre_k applied to a partition with fewer than k parts
  outside_class,       // inversion input has no 1s and no prime part
  not_in_image,        // no preimage in S_k reproduces the input exactly
  non_prime,
  unsupported_method,
  not_distinct,
  empty_partition,
  too_short,
  non_unit,
  malformed,           // colored/rooted object violates its class
  malformed_bfile,
  config_invalid,      // bad arguments, bad text formats, bad suite configs
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

// Process exit status for a failure class. 0 is success; 1 is reserved for
// generic failures (e.g. a verification suite reporting FAIL).
int exit_code(errc code);

}  // namespace espart
