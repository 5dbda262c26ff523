#pragma once

#include <string>

namespace lsp {
namespace report {

// Executes one command described by a JSON config object and returns the
// rendered report (JSON, or CSV when the config selects the flat view).
// All failures surface as lsp::error.
//
// The config echoes back inside the report with defaults resolved, so a
// byte-identical config always yields a byte-identical report.
std::string run(const std::string& config_json);

// Exit-relevant detail for the certification command: a structurally valid
// run whose trial schedule failed to decide every instance still renders a
// report, but callers must be able to tell it apart from a decided one.
struct RunResult {
  std::string text;
  bool undecided = false;
};

RunResult run_ex(const std::string& config_json);

}  // namespace report
}  // namespace lsp
