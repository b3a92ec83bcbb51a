// Command-line front end: runs DSL tasks and the acceptance suites.
//
//   tosc run FILE                 every task declared in FILE
//   tosc VERB FILE ARGS...        one task, e.g. `tosc osc ex.dsc f 2`
//   tosc check [all | C1 ...]     acceptance suites over the shipped corpus
//   tosc print FILE               canonical form of FILE
//
// Exit codes: 0 success, 1 property violation, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tosc/report.hpp"

namespace {

tosc::Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return tosc::parse_document(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfinite oscillation toolkit"};
  std::string verb;
  std::vector<std::string> args;
  bool json = false;
  tosc::RunOptions options;
  std::size_t alpha = 0;
  app.add_option("verb", verb, "run, print, check, eval, osc, dnorm, indices, glue, stepapprox, series, classify")
      ->required();
  app.add_option("args", args, "input file followed by task arguments");
  app.add_flag("--json", json, "emit JSON");
  app.add_option("--budget", options.budget, "copy budget for per-point tables")->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "seed for randomized suites");
  auto* alpha_opt = app.add_option("--alpha", alpha, "stage for osc tasks without an explicit stage");
  app.add_option("--corpus", options.corpus_dir, "corpus directory for check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (alpha_opt->count() > 0) options.alpha = alpha;

  try {
    tosc::TaskResult result;
    if (verb == "check") {
      tosc::Document none;
      tosc::Document::Task task{"check", args.empty() ? std::vector<std::string>{"all"} : args, 0};
      result = tosc::run_task(none, task, options);
    } else {
      if (args.empty()) throw std::invalid_argument("missing input file");
      const tosc::Document doc = load(args.front());
      if (verb == "print") {
        std::cout << tosc::print_document(doc);
        return 0;
      }
      if (verb == "run") {
        if (args.size() != 1) throw std::invalid_argument("run takes only the input file");
        result = tosc::run_document(doc, options);
      } else {
        tosc::Document::Task task{verb, std::vector<std::string>(args.begin() + 1, args.end()), 0};
        result = tosc::run_task(doc, task, options);
      }
    }
    std::cout << (json ? result.json.dump(2) + "\n" : tosc::render_text(result.json));
    return result.violation ? 1 : 0;
  } catch (const tosc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
