#pragma once

#include <iosfwd>

namespace gaugeline::cli {

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gaugeline::cli
