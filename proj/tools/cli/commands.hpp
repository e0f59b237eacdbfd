#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "capi.hpp"
#include "output.hpp"
#include "plot.hpp"
#include "scenario.hpp"

namespace gaugeline::cli {

/// Everything a run produces, computed before anything is written.
struct RunResult {
  std::vector<Artifact> files;
  std::vector<Series> series;
  nlohmann::ordered_json metadata;
  std::string console;  // text for stdout
  int exit_code = kExitOk;
};

RunResult execute(const Resolved& scenario);

struct PlotRequest {
  std::vector<std::string> inputs;
  std::string output;  // empty: plot.svg / plot.gp
  std::string format = "svg";
  bool log_scale = false;
  std::string title;
  std::string out_dir = ".";
};

RunResult execute_plot(const PlotRequest& request);

/// Re-checks an archived verification report (status and check inventory)
/// without writing anything; returns kExitOk or kExitVerify.
int check_report_file(const std::string& path, std::ostream& out);

/// Writes the run's files plus run_metadata.json; prints the console text.
int commit(const RunResult& result, const std::string& out_dir, std::ostream& out);

}  // namespace gaugeline::cli
