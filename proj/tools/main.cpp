#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gzero/eval.hpp"
#include "gzero/suites.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace gzero;

namespace {

json toJson(const dsl::QueryResult& r) {
  json j;
  j["query"] = r.query;
  j["verdict"] = r.verdict;
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  if (r.value) j["value"] = *r.value;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.errorType.empty()) j["error"] = r.errorType;
  if (r.asserted) j["check"] = true;
  j["elapsedMs"] = r.elapsedMs;
  return j;
}

json toJson(const suites::SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["passes"] = r.passes;
  j["failureCount"] = r.failureCount;
  j["failures"] = json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  j["seed"] = r.seed;
  j["window"] = r.window;
  j["samples"] = r.samples;
  j["oracle"] = {{"checks", r.oracleChecks},
                 {"disagreements", r.oracleDisagreements},
                 {"outOfReach", r.oracleSkipped}};
  j["metrics"] = r.metrics;
  j["elapsedMs"] = r.elapsedMs;
  return j;
}

void printText(const dsl::QueryResult& r) {
  std::cout << r.query << " => " << r.verdict;
  if (r.value) std::cout << " " << *r.value;
  if (r.witness) std::cout << " [witness " << *r.witness << "]";
  if (!r.reason.empty()) std::cout << " (" << (r.errorType.empty() ? "" : r.errorType + ": ") << r.reason << ")";
  std::cout << "\n";
}

void printText(const suites::SuiteReport& r) {
  std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " " << r.passes << "/" << r.cases
            << " cases, seed " << r.seed << ", window " << r.window << ", " << r.elapsedMs << " ms\n";
  std::cout << "  oracle: " << r.oracleChecks << " checked, " << r.oracleDisagreements
            << " disagree, " << r.oracleSkipped << " out of reach\n";
  for (const auto& [k, v] : r.metrics) std::cout << "  " << k << ": " << v << "\n";
  for (const auto& f : r.failures) {
    std::cout << "  failure: " << f.inputs << "\n    expected " << f.expected << "\n    got " << f.got
              << "\n";
  }
  if (r.failureCount > static_cast<long>(r.failures.size())) {
    std::cout << "  ... " << r.failureCount - static_cast<long>(r.failures.size()) << " more failures\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filters, formal sums and twisted matrices: query evaluator and property suites"};
  suites::SuiteConfig config;
  std::string format = "json";
  app.add_option("--seed", config.seed, "Sampling seed; hex digits parse, other text is hashed")
      ->default_val(std::string(kDefaultSeed));
  app.add_option("--window", config.window, "Oracle window radius")->default_val(32);
  app.add_option("--samples", config.samples, "Sample count for sampled suites")->default_val(200);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");
  app.require_subcommand(1);

  auto* evalCmd = app.add_subcommand("eval", "Evaluate a query file");
  std::string file;
  evalCmd->add_option("file", file, "Program file, or - for stdin")->required();

  auto* suiteCmd = app.add_subcommand("suite", "Run a named property suite");
  std::string name;
  bool list = false;
  suiteCmd->add_option("name", name, "Suite name");
  suiteCmd->add_flag("--list", list, "List the registered suites");

  CLI11_PARSE(app, argc, argv);

  if (evalCmd->parsed()) {
    std::stringstream text;
    if (file == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
      }
      text << in.rdbuf();
    }
    dsl::Evaluator ev;
    bool failed = false;
    for (const auto& r : ev.runProgram(text.str())) {
      failed = failed || r.failed();
      if (r.verdict == "error") std::cerr << r.query << ": " << r.reason << "\n";
      if (format == "json") {
        std::cout << toJson(r).dump() << "\n";
      } else {
        printText(r);
      }
    }
    return failed ? 1 : 0;
  }

  if (list) {
    json all = json::array();
    for (const auto& n : suites::suiteNames()) {
      if (format == "json") {
        all.push_back({{"suite", n}, {"summary", suites::suiteSummary(n)}});
      } else {
        std::cout << n << "  " << suites::suiteSummary(n) << "\n";
      }
    }
    if (format == "json") std::cout << all.dump(2) << "\n";
    return 0;
  }
  if (name.empty()) {
    std::cerr << "suite: give a suite name or --list\n";
    return 2;
  }
  try {
    const auto report = suites::runSuite(name, config);
    if (format == "json") {
      std::cout << toJson(report).dump(2) << "\n";
    } else {
      printText(report);
    }
    return report.passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
