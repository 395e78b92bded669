// Command-line front end; talks to the library exclusively through the
// C API in cuspcoh.h.
//
// Exit codes: 0 success, 1 invalid input or I/O error, 2 a mathematical
// stage or property failed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cuspcoh.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitStage = 2;

int exit_code_for(cusp_status status) {
  switch (status) {
    case CUSP_OK:
      return kExitOk;
    case CUSP_E_STAGE:
      return kExitStage;
    default:
      return kExitInvalid;
  }
}

std::string take_string(char *text) {
  std::string out = text ? text : "";
  cusp_string_free(text);
  return out;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Writes through a temporary sibling and renames, so a failed run never
// leaves a partial report behind.
bool write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    return false;
  }
  return true;
}

int run_check(const std::string& input, std::string report_path, long long cap, int jobs) {
  std::string scenario;
  if (!read_file(input, scenario)) {
    std::cerr << "error: cannot read scenario file '" << input << "'\n";
    return kExitInvalid;
  }

  // The scenario may name its own report path; the flag wins.
  if (report_path.empty()) {
    auto parsed = nlohmann::json::parse(scenario, nullptr, false);
    if (parsed.is_object() && parsed.contains("options") && parsed["options"].is_object() &&
        parsed["options"].contains("report") && parsed["options"]["report"].is_string())
      report_path = parsed["options"]["report"].get<std::string>();
  }

  char *report = nullptr;
  cusp_status status = cusp_check(scenario.c_str(), cap, jobs, &report);
  std::string report_text = take_string(report);
  if (status != CUSP_OK && status != CUSP_E_STAGE) {
    std::cerr << "error: " << cusp_last_error() << "\n";
    return exit_code_for(status);
  }
  if (report_path.empty()) {
    std::cout << report_text;
  } else if (!write_file_atomic(report_path, report_text)) {
    std::cerr << "error: cannot write report to '" << report_path << "'\n";
    return kExitInvalid;
  }
  if (status == CUSP_E_STAGE) std::cerr << cusp_last_error() << "\n";
  return exit_code_for(status);
}

int run_selftest(int max_n, long long cap, int jobs) {
  char *summary = nullptr;
  cusp_status status = cusp_selftest(max_n, cap, jobs, &summary);
  std::string text = take_string(summary);
  if (status != CUSP_OK && status != CUSP_E_STAGE) {
    std::cerr << "error: " << cusp_last_error() << "\n";
    return exit_code_for(status);
  }
  auto parsed = nlohmann::json::parse(text);
  std::printf("%-24s %8s %8s\n", "suite", "checks", "failed");
  for (const auto& suite : parsed["suites"]) {
    std::printf("%-24s %8lld %8lld\n", suite["suite"].get<std::string>().c_str(),
                suite["checks"].get<long long>(), suite["failures"].get<long long>());
    if (suite.contains("messages"))
      for (const auto& message : suite["messages"])
        std::printf("    ! %s\n", message.get<std::string>().c_str());
  }
  std::printf("%-24s %8lld %8lld\n", "total", parsed["checks"].get<long long>(),
              parsed["failures"].get<long long>());
  std::printf("result: %s\n", parsed["result"].get<std::string>().c_str());
  return exit_code_for(status);
}

int run_dump(const std::string& kind, int n, int q, int t) {
  char *json = nullptr;
  cusp_status status = cusp_dump(kind.c_str(), n, q, t, &json);
  if (status != CUSP_OK) {
    std::cerr << "error: " << cusp_last_error() << "\n";
    return exit_code_for(status);
  }
  std::cout << take_string(json);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{std::string("cuspcoh ") + cusp_version() +
               " — exact purity, base-change and cohomology certificates"};
  app.require_subcommand(1);

  long long cap = 0;
  int jobs = 0;
  app.add_option("--cap", cap, "resource cap (group elements / dimension product)")
      ->envname("CUSPCOH_CAP");
  app.add_option("--jobs", jobs, "parallelism width (default: available cores)")
      ->envname("CUSPCOH_JOBS");

  std::string input, report_path;
  CLI::App *check = app.add_subcommand("check", "run the staged analysis on a scenario file");
  check->fallthrough();
  check->add_option("--input", input, "scenario JSON file")->required();
  check->add_option("--report", report_path, "write the report here (default: stdout)");

  int max_n = 0;
  CLI::App *selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->fallthrough();
  selftest->add_option("--max-n", max_n, "largest rank to exercise (1..5)")->required();

  std::string kind;
  int n = -1, q = -1, t = -1;
  CLI::App *dump = app.add_subcommand("dump", "print a table or character multiset");
  dump->fallthrough();
  dump->add_option("--kind", kind, "wedge-p | wedge-u | chi-m | dims | lefschetz")->required();
  dump->add_option("--n", n, "rank");
  dump->add_option("--q", q, "wedge degree (wedge-p)");
  dump->add_option("--t", t, "wedge degree (wedge-u)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (jobs <= 0) jobs = 0;  // library resolves to the available cores

  if (check->parsed()) return run_check(input, report_path, cap, jobs);
  if (selftest->parsed()) return run_selftest(max_n, cap, jobs);
  if (dump->parsed()) return run_dump(kind, n, q, t);
  return kExitInvalid;
}
