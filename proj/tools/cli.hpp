#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "prpd/pipeline.hpp"

namespace prpd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputeError = 1;
inline constexpr int kUsageError = 2;

// Entry point shared by main() and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void write_eval_text(std::ostream& out, const EvalReport& report);
void write_eval_json(std::ostream& out, const EvalReport& report);

}  // namespace prpd::cli
