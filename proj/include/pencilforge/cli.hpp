#pragma once

// Batch front end. Every invocation prints exactly one JSON document on
// `out`:
//
//   {"ok": true,  "result": ...}
//   {"ok": false, "error": {"kind": "format"|"usage"|"domain"|"internal", "message": ...}}
//
// Exit status: 0 on success, 2 for malformed input (bad JSON, wrong shape,
// bad flags), 3 when a module rejects the input on mathematical grounds,
// 1 for anything else. `err` only ever receives free-form diagnostics.

#include <ostream>
#include <span>
#include <string>

namespace pencilforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitFormat = 2;
inline constexpr int kExitDomain = 3;

/// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace pencilforge::cli
