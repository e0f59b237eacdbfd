#include "capi.hpp"

namespace gaugeline::cli {

int exit_code_for(gl_status status) {
  switch (status) {
    case GL_OK:
      return kExitOk;
    case GL_ERR_PARSE:
    case GL_ERR_CONFIG:
      return kExitParse;
    case GL_ERR_DOMAIN:
      return kExitDomain;
    default:
      return kExitIo;
  }
}

void check(gl_status status) {
  if (status == GL_OK) return;
  const std::string msg = gl_last_error();
  throw CliError(exit_code_for(status), msg.empty() ? gl_status_name(status) : msg);
}

gl_gauge parse_gauge(const std::string& text) {
  gl_gauge g{};
  check(gl_gauge_parse(text.c_str(), &g));
  return g;
}

std::string gauge_name(gl_gauge gauge) {
  return fetch_string([&](char* b, size_t c, size_t* n) { return gl_gauge_name(gauge, b, c, n); });
}

std::string gauge_display_name(gl_gauge gauge) {
  return fetch_string(
      [&](char* b, size_t c, size_t* n) { return gl_gauge_display_name(gauge, b, c, n); });
}

std::string spectrum_csv(const gl_spectrum* spectrum) {
  return fetch_string(
      [&](char* b, size_t c, size_t* n) { return gl_spectrum_to_csv(spectrum, b, c, n); });
}

}  // namespace gaugeline::cli
