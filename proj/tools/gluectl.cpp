#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gluing/cli.hpp"
#include "gluing/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Check and construct gluings of finite topological spaces"};
  std::string command, file = "-";
  gluing::RunArgs args;
  std::string kind, mode;
  bool derive = false, machine = false;
  app.add_option("command", command, "One of: validate, glue, check-cone, check-glued, mediate, "
                                     "verify-universal, check-otop, check-refinement, compose, "
                                     "cover-check, cover-functor, site-check, render-dot")
      ->required();
  app.add_option("file", file, "Spec file, or - for standard input");
  app.add_option("target", args.target, "Name of the gluing, cone, refinement, meta-gluing or "
                                        "covering; index:a,b,c for render-dot");
  app.add_option("--budget", args.budget, "Oracle search budget (candidate maps)");
  app.add_flag("--derive-triples", derive, "Derive absent triple maps");
  app.add_option("--kind", kind, "Covering kind override")->check(CLI::IsMember({"gluing", "open"}));
  app.add_option("--mode", mode, "Cone mode for check-cone")
      ->check(CLI::IsMember({"full", "figure3", "figure4"}));
  app.add_option("--seed", args.seed, "Seed for site-check");
  app.add_option("--count", args.count, "Instances for site-check");
  app.add_flag("--machine", machine, "Print the report as JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gluing::kInputError;
  }
  if (!kind.empty()) args.kind = kind;
  if (!mode.empty()) args.mode = mode;

  std::string text = "{}";
  if (command != "site-check" || file != "-") {
    std::ostringstream buf;
    if (file == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return gluing::kInputError;
      }
      buf << in.rdbuf();
    }
    text = buf.str();
  }
  try {
    gluing::RunReport r = gluing::run_text(text, command, args, derive);
    std::cout << (machine ? r.machine() : r.human());
    return r.exit_code;
  } catch (const gluing::UnknownCommand& e) {
    std::cerr << e.what() << "\n";
    return gluing::kInputError;
  }
}
