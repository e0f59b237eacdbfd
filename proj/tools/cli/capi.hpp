#pragma once

// Thin C++ conveniences over the gaugeline C API.

#include <gaugeline/gaugeline.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace gaugeline::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitVerify = 4,
};

/// Failure carrying the process exit code it maps to.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

int exit_code_for(gl_status status);

/// Throws CliError built from gl_last_error() unless status is GL_OK.
void check(gl_status status);

struct AtomDeleter {
  void operator()(gl_atom* p) const { gl_atom_free(p); }
};
struct SpectrumDeleter {
  void operator()(gl_spectrum* p) const { gl_spectrum_free(p); }
};
struct TrajectoryDeleter {
  void operator()(gl_trajectory* p) const { gl_trajectory_free(p); }
};
struct ReportDeleter {
  void operator()(gl_report* p) const { gl_report_free(p); }
};

using AtomPtr = std::unique_ptr<gl_atom, AtomDeleter>;
using SpectrumPtr = std::unique_ptr<gl_spectrum, SpectrumDeleter>;
using TrajectoryPtr = std::unique_ptr<gl_trajectory, TrajectoryDeleter>;
using ReportPtr = std::unique_ptr<gl_report, ReportDeleter>;

/// Calls a (buf, cap, needed) function twice: size query, then fill.
template <class F>
std::string fetch_string(F&& fill) {
  size_t needed = 0;
  check(fill(nullptr, 0, &needed));
  std::string out(needed, '\0');
  check(fill(out.data(), out.size(), &needed));
  out.resize(needed > 0 ? needed - 1 : 0);
  return out;
}

gl_gauge parse_gauge(const std::string& text);
std::string gauge_name(gl_gauge gauge);
std::string gauge_display_name(gl_gauge gauge);
std::string spectrum_csv(const gl_spectrum* spectrum);

}  // namespace gaugeline::cli
