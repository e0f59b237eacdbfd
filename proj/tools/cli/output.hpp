#pragma once

#include <string>
#include <vector>

namespace gaugeline::cli {

struct Artifact {
  std::string path;  // relative to the output directory unless absolute
  std::string content;
};

/// Writes to a temporary sibling and renames it into place, so a reader
/// never sees a partially written file. Throws CliError (exit 1).
void atomic_write(const std::string& path, const std::string& content);

/// Writes every artifact under `dir`; returns the paths written.
std::vector<std::string> write_all(const std::string& dir, const std::vector<Artifact>& files);

/// Lowercase representation name made safe for file names.
std::string file_stem(const std::string& name);

/// Shortest "%.*g" form that reads back to the same double.
std::string shortest(double value);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace gaugeline::cli
