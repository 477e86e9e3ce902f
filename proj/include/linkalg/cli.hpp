#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "linkalg/verdict.hpp"

namespace linkalg::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 computed, 1 usage or input error, 2 resource budget tripped.
/// `args` excludes the program name.  One JSON document goes to `out`, a summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SessionTask {
  int line = 0;
  std::vector<std::string> words;
};

/// ring x, y, z / ideal a = x*y, x^2 / module M = R / a / task linkage check a b I over M
struct SessionFile {
  std::vector<std::string> vars;
  /// name -> generator text, in declaration order
  std::vector<std::pair<std::string, std::string>> ideals;
  /// name -> defining ideal name ("" for R itself)
  std::vector<std::pair<std::string, std::string>> modules;
  std::vector<SessionTask> tasks;
};

/// Throws InputError("line N: ...") on syntax errors and unresolved names.
SessionFile parse_session_text(const std::string& text);
SessionFile parse_session(const std::string& path);
/// Canonical text; parse_session_text(emit_session(s)) emits the same text again.
std::string emit_session(const SessionFile& s);
Json run_session(const SessionFile& s);

}  // namespace linkalg::cli
