#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gluing/report.hpp"
#include "gluing/spec_io.hpp"

namespace gluing {

struct RunArgs {
  std::string target;  // gluing, cone, refinement, meta-gluing or covering name
  std::uint64_t budget = 1'000'000;
  std::optional<std::string> kind;  // covering kind override
  std::optional<std::string> mode;  // cone mode for check-cone
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

// Exit statuses of the command line tool.
enum ExitCode { kPass = 0, kCheckFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

struct RunReport {
  std::string command;
  std::string target;
  int exit_code = kPass;
  std::vector<Report> reports;
  std::vector<std::string> objects;  // human summaries of constructed objects
  std::string error;                 // set when a module error stopped the run

  std::string human() const;
  std::string machine() const;  // JSON
};

const std::vector<std::string>& commands();

// Never throws for module errors; they are folded into the report with the
// matching exit code. Throws UnknownCommand for commands outside the list.
RunReport run(const SpecDocument& doc, const std::string& command, const RunArgs& args);

// Target is a gluing, a meta-gluing, or "index:a,b,c" for a bare index set.
// Throws UnknownTarget.
std::string render_dot(const SpecDocument& doc, const std::string& target);

// Parses the spec text and runs the command; parse errors become exit 2.
RunReport run_text(const std::string& text, const std::string& command, const RunArgs& args,
                   bool derive_triples);

}  // namespace gluing
