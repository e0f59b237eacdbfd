#include "core/atom.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "core/repr.hpp"
#include "textconf/textconf.hpp"

namespace gaugeline {

double norm2(const CVec3& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

std::complex<double> project(const CVec3& v, const Vec3& axis) {
  return v[0] * axis[0] + v[1] * axis[1] + v[2] * axis[2];
}

namespace {

CVec3 conj(const CVec3& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

bool is_zero(const CVec3& v) { return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0; }

}  // namespace

AtomModel::AtomModel(std::vector<Level> levels, const std::vector<DipoleEntry>& dipoles,
                     double mass, double charge, std::optional<Vec3> confinement_axis)
    : levels_(std::move(levels)), mass_(mass), charge_(charge), axis_(confinement_axis) {
  if (levels_.size() < 2) throw ConfigError("an atom model needs at least two levels");
  if (!(mass_ > 0.0) || !std::isfinite(mass_)) throw DomainError("electron mass must be positive");
  if (!(charge_ > 0.0) || !std::isfinite(charge_)) throw DomainError("charge must be positive");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!std::isfinite(levels_[i].energy))
      throw DomainError("level '" + levels_[i].label + "' has a non-finite energy");
    if (i > 0 && !(levels_[i].energy > levels_[i - 1].energy))
      throw ConfigError("level energies must be strictly increasing ('" + levels_[i].label +
                        "' is not above '" + levels_[i - 1].label + "')");
    for (std::size_t j = 0; j < i; ++j)
      if (levels_[j].label == levels_[i].label)
        throw ConfigError("duplicate level label '" + levels_[i].label + "'");
  }
  if (axis_) {
    const Vec3& a = *axis_;
    const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (!(n > 0.0)) throw DomainError("confinement axis must be non-zero");
    axis_ = Vec3{a[0] / n, a[1] / n, a[2] / n};
  }

  const std::size_t n = levels_.size();
  dipoles_.assign(n * n, CVec3{});
  std::vector<bool> set(n * n, false);
  for (const auto& entry : dipoles) {
    const std::size_t u = index_of(entry.upper);
    const std::size_t l = index_of(entry.lower);
    if (u == l)
      throw ConfigError("diagonal dipole element for '" + entry.upper +
                        "' (levels must have definite parity)");
    for (const auto& c : entry.d)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw DomainError("non-finite dipole element " + entry.upper + "," + entry.lower);
    const CVec3 reverse = conj(entry.d);
    if (set[u * n + l] && dipoles_[u * n + l] != entry.d)
      throw ConfigError("conflicting dipole elements for " + entry.upper + "," + entry.lower);
    if (set[l * n + u] && dipoles_[l * n + u] != reverse)
      throw ConfigError("dipole elements " + entry.upper + "," + entry.lower + " and " +
                        entry.lower + "," + entry.upper + " are not Hermitian conjugates");
    dipoles_[u * n + l] = entry.d;
    dipoles_[l * n + u] = reverse;
    set[u * n + l] = set[l * n + u] = true;
  }
  if (axis_) {
    for (std::size_t i = 0; i < n * n; ++i) {
      const CVec3& d = dipoles_[i];
      const std::complex<double> along = project(d, *axis_);
      const double residual = norm2(d) - std::norm(along);
      if (residual > 1e-24 * (1.0 + norm2(d)))
        throw ConfigError("dipole element not parallel to the confinement axis");
    }
  }
}

std::size_t AtomModel::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].label == label) return i;
  throw ConfigError("unknown state '" + std::string(label) + "'");
}

CVec3 AtomModel::position(std::size_t n, std::size_t m) const {
  const CVec3& d = dipole(n, m);
  return {-d[0] / charge_, -d[1] / charge_, -d[2] / charge_};
}

CVec3 AtomModel::momentum(std::size_t n, std::size_t m) const {
  const std::complex<double> factor(0.0, mass_ * transition_frequency(n, m));
  const CVec3 r = position(n, m);
  return {factor * r[0], factor * r[1], factor * r[2]};
}

bool AtomModel::coupled(std::size_t n, std::size_t m) const { return !is_zero(dipole(n, m)); }

AtomModel build_two_level(double omega_eg, double d_eg, double mass, double charge) {
  if (!(omega_eg > 0.0) || !std::isfinite(omega_eg))
    throw DomainError("transition frequency must be positive, got " + shortest_repr(omega_eg));
  if (!(d_eg >= 0.0) || !std::isfinite(d_eg))
    throw DomainError("dipole magnitude must be non-negative, got " + shortest_repr(d_eg));
  std::vector<DipoleEntry> dipoles;
  if (d_eg > 0.0) dipoles.push_back({"e", "g", CVec3{0.0, 0.0, d_eg}});
  return AtomModel({{"g", 0.0}, {"e", omega_eg}}, dipoles, mass, charge);
}

AtomModel build_oscillator(double omega, double mass, int n_levels, double charge) {
  if (n_levels < 3) throw ConfigError("oscillator needs at least 3 levels, got " + std::to_string(n_levels));
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("oscillator frequency must be positive");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("electron mass must be positive");
  std::vector<Level> levels;
  std::vector<DipoleEntry> dipoles;
  for (int n = 0; n < n_levels; ++n) levels.push_back({std::to_string(n), n * omega});
  for (int n = 0; n + 1 < n_levels; ++n) {
    const double x = std::sqrt((n + 1) / (2.0 * mass * omega));
    dipoles.push_back({std::to_string(n + 1), std::to_string(n), CVec3{-charge * x, 0.0, 0.0}});
  }
  return AtomModel(std::move(levels), dipoles, mass, charge, Vec3{1.0, 0.0, 0.0});
}

double trk_sum(const AtomModel& model, std::string_view state, const Vec3& axis) {
  const std::size_t s = model.index_of(state);
  double sum = 0.0;
  for (std::size_t n = 0; n < model.size(); ++n) {
    if (n == s) continue;
    sum += model.transition_frequency(n, s) * std::norm(project(model.position(n, s), axis));
  }
  return sum;
}

namespace {

std::vector<double> split_numbers(const textconf::Reader& reader, const textconf::Entry& e) {
  std::vector<double> out;
  std::istringstream in(e.value);
  std::string tok;
  while (in >> tok) {
    bool ok = false;
    const double v = textconf::parse_number(tok, &ok);
    if (!ok) reader.fail(e, "expected numbers, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

AtomModel parse_atom(std::string_view text, const std::string& source_name) {
  const textconf::Document doc = textconf::parse(text, source_name);

  textconf::Reader top(doc, doc.top, "top level");
  const double mass = top.optional_number("mass").value_or(1.0);
  const double charge = top.optional_number("charge").value_or(1.0);
  std::optional<Vec3> axis;
  if (const auto* e = top.find("confinement_axis")) {
    const auto v = split_numbers(top, *e);
    if (v.size() != 3) top.fail(*e, "confinement_axis expects three components");
    axis = Vec3{v[0], v[1], v[2]};
  }
  top.finish();

  const auto* levels_section = doc.section("levels");
  if (!levels_section) throw ParseError(source_name, 1, 1, "missing 'levels:' section");
  std::vector<Level> levels;
  textconf::Reader level_reader(doc, levels_section->entries, "section 'levels'");
  for (const auto& e : levels_section->entries) {
    levels.push_back({e.key, *level_reader.optional_number(e.key)});
  }

  std::vector<DipoleEntry> dipoles;
  if (const auto* dip = doc.section("dipoles")) {
    textconf::Reader dip_reader(doc, dip->entries, "section 'dipoles'");
    for (const auto& e : dip->entries) {
      dip_reader.find(e.key);
      std::istringstream key(e.key);
      std::string upper, lower, extra;
      if (!(key >> upper >> lower) || (key >> extra))
        throw ParseError(source_name, e.line, e.key_column,
                         "dipole key must be '<upper> <lower>', got '" + e.key + "'");
      const auto v = split_numbers(dip_reader, e);
      CVec3 d{};
      if (v.size() == 3) {
        d = {v[0], v[1], v[2]};
      } else if (v.size() == 6) {
        d = {std::complex<double>(v[0], v[1]), std::complex<double>(v[2], v[3]),
             std::complex<double>(v[4], v[5])};
      } else {
        dip_reader.fail(e, "dipole expects 3 real or 6 (re im) components");
      }
      dipoles.push_back({upper, lower, d});
    }
  }
  for (const auto& s : doc.sections) {
    if (s.name != "levels" && s.name != "dipoles")
      throw ParseError(source_name, s.line, 1, "unknown section '" + s.name + "'");
  }
  return AtomModel(std::move(levels), dipoles, mass, charge, axis);
}

AtomModel load_atom(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open atom file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_atom(buf.str(), path);
}

}  // namespace gaugeline
