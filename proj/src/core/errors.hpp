#pragma once

#include <stdexcept>
#include <string>

namespace lsp {

// Error categories, mirrored 1:1 by the C API status codes.
enum class errc {
  usage,       // malformed input: unknown tokens, bad rationals, bad JSON
  domain,      // a precondition on mathematical input is violated
  capability,  // the request is well-formed but outside the supported table
  capacity,    // a configured enumeration bound was exceeded
  invariant,   // an internal consistency check failed
  undecided,   // a certificate search exhausted its schedule
  internal,    // unexpected failure (bad_alloc, logic slip)
};

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

// Invariant checks that must hold if the implementation is correct.
inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) fail(errc::invariant, what);
}

}  // namespace lsp
