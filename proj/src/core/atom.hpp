#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaugeline {

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<std::complex<double>, 3>;

struct Level {
  std::string label;
  double energy;  // angular frequency
};

/// Dipole matrix element d_{upper,lower}; the conjugate element is implied.
struct DipoleEntry {
  std::string upper;
  std::string lower;
  CVec3 d;
};

/// Bound-electron level model: energies, dipole matrix elements, mass, charge.
///
/// Immutable after construction. Position elements are r_nm = -d_nm/e and
/// momentum elements are always derived as p_nm = i m w_nm r_nm; they are
/// never stored.
///
/// An electron confined to a single axis (the oscillator test atom) carries
/// that axis, so that the Coulomb-gauge A^2 term only sees the field
/// component the electron can respond to.
class AtomModel {
 public:
  AtomModel(std::vector<Level> levels, const std::vector<DipoleEntry>& dipoles, double mass = 1.0,
            double charge = 1.0, std::optional<Vec3> confinement_axis = std::nullopt);

  std::size_t size() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const Level& level(std::size_t i) const { return levels_.at(i); }
  /// Throws ConfigError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  double mass() const noexcept { return mass_; }
  double charge() const noexcept { return charge_; }
  const std::optional<Vec3>& confinement_axis() const noexcept { return axis_; }

  /// w_nm = w_n - w_m.
  double transition_frequency(std::size_t n, std::size_t m) const {
    return levels_[n].energy - levels_[m].energy;
  }

  const CVec3& dipole(std::size_t n, std::size_t m) const { return dipoles_[n * size() + m]; }
  CVec3 position(std::size_t n, std::size_t m) const;
  CVec3 momentum(std::size_t n, std::size_t m) const;
  bool coupled(std::size_t n, std::size_t m) const;

  /// sum_lambda Int dOmega |e_k,lambda . M|^2 / (8 pi / 3), M the mobility
  /// projector: 3 for a free electron, 1 for an axis-confined one.
  double mobile_dimensions() const noexcept { return axis_ ? 1.0 : 3.0; }

 private:
  std::vector<Level> levels_;
  std::vector<CVec3> dipoles_;
  double mass_;
  double charge_;
  std::optional<Vec3> axis_;
};

/// Ground "g" at 0 and excited "e" at omega_eg, dipole d_eg along z.
AtomModel build_two_level(double omega_eg, double d_eg, double mass = 1.0, double charge = 1.0);

/// Truncated harmonic ladder along x: w_n = n*omega, x_{n,n+1} = sqrt((n+1)/(2 m omega)).
/// Level labels are "0", "1", ...
AtomModel build_oscillator(double omega, double mass, int n_levels, double charge = 1.0);

/// Thomas-Reiche-Kuhn sum  sum_n w_ns |r_ns . axis|^2  for state s.
double trk_sum(const AtomModel& model, std::string_view state, const Vec3& axis);

/// Reads the atom text format (see presets/atoms/ for examples).
AtomModel parse_atom(std::string_view text, const std::string& source_name);
AtomModel load_atom(const std::string& path);

double norm2(const CVec3& v);
std::complex<double> project(const CVec3& v, const Vec3& axis);

}  // namespace gaugeline
