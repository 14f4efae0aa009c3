#pragma once
#include <stdexcept>
#include <string>

namespace tk {

/* Error taxonomy. Kind decides CLI exit code: parse errors exit 2,
   everything else here exits 3. */
enum class ErrKind {
  Parse,         // malformed word / twist word / flag value
  InvalidConfig, // unsupported (g,B,P), bad table data, non-composable path
  Chart,         // chart inadmissible at the given character
  Indeterminate, // evaluation hits a zero denominator
  Inconsistent,  // data fails a structural cross-check
};

class Error : public std::runtime_error {
public:
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrKind kind;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace tk
