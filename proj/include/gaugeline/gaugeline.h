#ifndef GAUGELINE_GAUGELINE_H
#define GAUGELINE_GAUGELINE_H

/*
 * C interface to the gaugeline library.
 *
 * Every fallible call returns a gl_status; on failure a message is kept in
 * thread-local storage and returned by gl_last_error(). Objects are opaque
 * handles released with the matching *_free function (NULL is accepted).
 *
 * Strings returned as `const char*` stay valid for the lifetime of the
 * owning handle. Functions that fill a caller buffer take (buf, cap, needed):
 * *needed receives the size including the terminating NUL, and
 * GL_ERR_BUFFER is returned when cap is too small (pass buf = NULL, cap = 0
 * to query the size).
 *
 * Units: hbar = c = eps0 = 1. Frequencies are angular.
 */

#include <stddef.h>

#if defined(_WIN32)
#define GL_API __declspec(dllexport)
#elif defined(__GNUC__)
#define GL_API __attribute__((visibility("default")))
#else
#define GL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gl_status {
  GL_OK = 0,
  GL_ERR_DOMAIN = 1,     /* physically invalid argument */
  GL_ERR_CONFIG = 2,     /* structurally invalid setup */
  GL_ERR_PARSE = 3,      /* malformed text input */
  GL_ERR_INTEGRATOR = 4, /* ODE failure */
  GL_ERR_IO = 5,
  GL_ERR_NULL = 6,       /* required pointer argument was NULL */
  GL_ERR_BUFFER = 7,     /* caller buffer too small */
  GL_ERR_INTERNAL = 8
} gl_status;

typedef enum gl_gauge_kind {
  GL_GAUGE_COULOMB = 0,
  GL_GAUGE_POINCARE = 1,
  GL_GAUGE_SYMMETRIC = 2,
  GL_GAUGE_CUSTOM = 3 /* constant alpha in [0,1] */
} gl_gauge_kind;

typedef struct gl_gauge {
  gl_gauge_kind kind;
  double alpha; /* used only by GL_GAUGE_CUSTOM */
} gl_gauge;

typedef struct gl_complex {
  double re;
  double im;
} gl_complex;

typedef struct gl_atom gl_atom;
typedef struct gl_spectrum gl_spectrum;
typedef struct gl_trajectory gl_trajectory;
typedef struct gl_report gl_report;

GL_API const char* gl_version(void);
GL_API const char* gl_last_error(void);
GL_API const char* gl_status_name(gl_status status);

/* ---- representations ---------------------------------------------------- */

/* "coulomb" | "poincare" | "symmetric" | "alpha:<float>" */
GL_API gl_status gl_gauge_parse(const char* text, gl_gauge* out);
GL_API gl_status gl_gauge_name(gl_gauge gauge, char* buf, size_t cap, size_t* needed);
GL_API gl_status gl_gauge_display_name(gl_gauge gauge, char* buf, size_t cap, size_t* needed);
GL_API gl_status gl_alpha_k(gl_gauge gauge, double omega_k, double omega_0, double* out);
GL_API gl_status gl_coupling_pair(gl_gauge gauge, double omega_k, double omega_0, double* u_plus,
                                  double* u_minus);

/* ---- atoms -------------------------------------------------------------- */

GL_API gl_status gl_atom_two_level(double omega_eg, double d_eg, gl_atom** out);
GL_API gl_status gl_atom_oscillator(double omega, double mass, int n_levels, gl_atom** out);
GL_API gl_status gl_atom_parse(const char* text, const char* source_name, gl_atom** out);
GL_API gl_status gl_atom_load(const char* path, gl_atom** out);
GL_API void gl_atom_free(gl_atom* atom);

GL_API gl_status gl_atom_level_count(const gl_atom* atom, size_t* out);
GL_API gl_status gl_atom_level(const gl_atom* atom, size_t index, const char** label,
                               double* energy);
GL_API gl_status gl_atom_mass(const gl_atom* atom, double* mass, double* charge);
/* d_nm, r_nm and p_nm for labelled levels n, m. */
GL_API gl_status gl_atom_dipole(const gl_atom* atom, const char* n, const char* m, gl_complex out[3]);
GL_API gl_status gl_atom_position(const gl_atom* atom, const char* n, const char* m,
                                  gl_complex out[3]);
GL_API gl_status gl_atom_momentum(const gl_atom* atom, const char* n, const char* m,
                                  gl_complex out[3]);
GL_API gl_status gl_trk_sum(const gl_atom* atom, const char* state, const double axis[3],
                            double* out);

/* ---- lineshape ---------------------------------------------------------- */

GL_API gl_status gl_numerator(gl_gauge gauge, double omega_k, double omega_eg, double* out);
GL_API gl_status gl_numerator_first_principles(gl_gauge gauge, double omega_k, double omega_eg,
                                               double* out);
GL_API gl_status gl_gamma_onshell(const gl_atom* atom, const char* upper, const char* lower,
                                  double* out);
GL_API gl_status gl_gamma_onshell_via(const gl_atom* atom, const char* upper, const char* lower,
                                      gl_gauge gauge, double* out);
GL_API gl_status gl_gamma_offshell(double omega, const gl_atom* atom, const char* initial,
                                   gl_gauge gauge, double* out);
/* Shifts return the value and the quadrature error estimate (may be NULL). */
GL_API gl_status gl_delta_offshell(double omega, const gl_atom* atom, const char* initial,
                                   gl_gauge gauge, double cutoff, double* value, double* error);
GL_API gl_status gl_total_shift(const gl_atom* atom, const char* state, gl_gauge gauge,
                                double cutoff, double* value, double* error);
GL_API gl_status gl_total_shift_mode(const gl_atom* atom, const char* state, gl_gauge gauge,
                                     double omega, double* out);
GL_API gl_status gl_lamb_shift(const gl_atom* atom, const char* state, double cutoff,
                               double* value, double* error);

typedef struct gl_lineshape_params {
  gl_gauge gauge;
  double omega_eg;
  double gamma;
  double lamb_shift;
  double cutoff;      /* echoed into metadata */
  int offshell_gamma; /* experimental: Gamma(w) = Gamma * numerator(w) */
} gl_lineshape_params;

GL_API void gl_lineshape_params_default(gl_lineshape_params* params);
GL_API gl_status gl_lineshape(const gl_lineshape_params* params, const double* grid, size_t n,
                              gl_spectrum** out);

/* ---- spectra ------------------------------------------------------------ */

/* Fills `points` values into out (cap >= points). log != 0 for log spacing. */
GL_API gl_status gl_make_grid(double min, double max, int points, int log, double* out,
                              size_t cap);

GL_API gl_status gl_spectrum_create(const double* grid, const double* values, size_t n,
                                    const char* representation, gl_spectrum** out);
GL_API void gl_spectrum_free(gl_spectrum* spectrum);
GL_API size_t gl_spectrum_size(const gl_spectrum* spectrum);
GL_API const double* gl_spectrum_grid(const gl_spectrum* spectrum);
GL_API const double* gl_spectrum_values(const gl_spectrum* spectrum);
GL_API const char* gl_spectrum_representation(const gl_spectrum* spectrum);
GL_API const char* gl_spectrum_note(const gl_spectrum* spectrum);
GL_API gl_status gl_spectrum_meta(const gl_spectrum* spectrum, double* gamma, double* omega_eg,
                                  double* lamb_shift, double* cutoff);
GL_API gl_status gl_spectrum_set_meta(gl_spectrum* spectrum, double gamma, double omega_eg,
                                      double lamb_shift, double cutoff);
GL_API size_t gl_spectrum_param_count(const gl_spectrum* spectrum);
GL_API gl_status gl_spectrum_param(const gl_spectrum* spectrum, size_t index, const char** key,
                                   const char** value);
/* Name and values of the optional extra column; *name is NULL when absent. */
GL_API gl_status gl_spectrum_extra(const gl_spectrum* spectrum, const char** name,
                                   const double** values);
GL_API gl_status gl_spectrum_integral(const gl_spectrum* spectrum, double* out);
GL_API gl_status gl_spectrum_to_csv(const gl_spectrum* spectrum, char* buf, size_t cap,
                                    size_t* needed);

/* ---- fluorescence ------------------------------------------------------- */

typedef struct gl_sharp_line {
  double intensity;
  double omega_0;
  double omega_eg;
  double gamma;
  double dipole_proj;
  gl_gauge gauge;
} gl_sharp_line;

typedef struct gl_lamb_line {
  double intensity;
  double omega;
  double omega_prime;
  double gamma_2p1s;
  double dipole_proj;
  gl_gauge gauge;
} gl_lamb_line;

GL_API gl_status gl_n_factor(gl_gauge gauge, double omega_0, double omega_eg, double* out);
GL_API gl_status gl_n_factor_first_principles(gl_gauge gauge, double omega_0, double omega_eg,
                                              double* out);
GL_API gl_status gl_fluorescence_rate(const gl_sharp_line* scenario, double* out);
GL_API gl_status gl_fluorescence_sweep(const gl_sharp_line* scenario, const double* grid, size_t n,
                                       gl_spectrum** out);
GL_API gl_status gl_damped_rate_general(const gl_atom* atom, const char* initial, gl_gauge gauge,
                                        const double* omegas, const double* intensities,
                                        size_t n_lines, const double polarization[3], double* out);
GL_API gl_status gl_damped_rate_spectrum(const gl_atom* atom, const char* initial, gl_gauge gauge,
                                         const gl_spectrum* incident, const double polarization[3],
                                         double* out);
GL_API gl_status gl_lamb_n_factor(gl_gauge gauge, double omega_0, double omega,
                                  double omega_prime, double* out);
GL_API gl_status gl_lamb_n_factor_first_principles(gl_gauge gauge, double omega_0, double omega,
                                                   double omega_prime, double* out);
GL_API gl_status gl_lamb_line_preset(const char* name, gl_lamb_line* out);
GL_API gl_status gl_lamb_rate_sweep(const gl_lamb_line* scenario, const double* grid, size_t n,
                                    gl_spectrum** out);

/* ---- pulse -------------------------------------------------------------- */

typedef struct gl_pulse {
  double rabi; /* 0 disables the pulse */
  double omega_l;
  int has_alpha_laser; /* 0: alpha from the representation at omega_l */
  double alpha_laser;
} gl_pulse;

typedef enum gl_pulse_variant {
  GL_PULSE_FULL = 0,
  GL_PULSE_LASER_FREE = 1,
  GL_PULSE_LORENTZIAN = 2,
  GL_PULSE_LORENTZIAN_LASER = 3
} gl_pulse_variant;

typedef struct gl_dynamics_options {
  int rwa;
  int include_field_during_pulse;
  double t_end; /* 0: 55/gamma */
  int pulse_samples;
  int decay_samples;
  double rel_tol;
  double abs_tol;
  double fixed_step; /* > 0: fixed-step RK4 */
} gl_dynamics_options;

GL_API void gl_dynamics_options_default(gl_dynamics_options* options);

GL_API gl_status gl_laser_coupling(const gl_pulse* pulse, gl_gauge gauge, double omega_0,
                                   double* u_plus, double* u_minus, double* alpha);
GL_API gl_status gl_excited_amplitude(double t, const gl_pulse* pulse, gl_gauge gauge,
                                      double omega_0, gl_complex* out);
GL_API gl_status gl_ground_amplitude(double t, const gl_pulse* pulse, gl_gauge gauge,
                                     double omega_0, gl_complex* out);
GL_API gl_status gl_closed_form_amplitude(double omega_k, const gl_pulse* pulse, gl_gauge gauge,
                                          double omega_0, double gamma, gl_complex* beta,
                                          double* u_minus);
GL_API gl_status gl_resonant_amplitude(double delta_k, double rabi, double gamma, gl_complex* out);

GL_API gl_status gl_integrate_dynamics(const gl_pulse* pulse, gl_gauge gauge, double omega_0,
                                       double gamma, const double* mode_grid, size_t n_modes,
                                       const gl_dynamics_options* options, gl_trajectory** out);
GL_API void gl_trajectory_free(gl_trajectory* trajectory);
GL_API size_t gl_trajectory_size(const gl_trajectory* trajectory);
GL_API gl_status gl_trajectory_point(const gl_trajectory* trajectory, size_t index, double* t,
                                     gl_complex* b_g, gl_complex* b_e);
GL_API size_t gl_trajectory_mode_count(const gl_trajectory* trajectory);
GL_API gl_status gl_trajectory_mode(const gl_trajectory* trajectory, size_t index, double* omega_k,
                                    gl_complex* amplitude, gl_complex* beta);
GL_API gl_status gl_trajectory_max_norm_error(const gl_trajectory* trajectory, double* out);
/* CSV header t,re_bg0,im_bg0,re_be0,im_be0 */
GL_API gl_status gl_trajectory_to_csv(const gl_trajectory* trajectory, char* buf, size_t cap,
                                      size_t* needed);

GL_API gl_status gl_pulse_spectrum(const gl_pulse* pulse, gl_gauge gauge, double omega_0,
                                   double gamma, const double* grid, size_t n,
                                   gl_pulse_variant variant, gl_spectrum** out);
/* out[g * n_delta + d]: max relative deviation of gauge g at delta_l[d]
   from the same gauge at delta_l = 0. */
GL_API gl_status gl_pulse_detuning_scan(const gl_pulse* base, const gl_gauge* gauges,
                                        size_t n_gauges, const double* delta_l, size_t n_delta,
                                        double omega_0, double gamma, const double* grid, size_t n,
                                        double* out);

/* ---- verification ------------------------------------------------------- */

typedef struct gl_check_info {
  const char* name;
  const char* status; /* pass | FAIL | expected-fail | unexpected-pass */
  const char* description;
  const char* anchor;
  double residual;
  double tolerance;
  int passed;
  int expected_failure;
} gl_check_info;

GL_API gl_status gl_verify_run(gl_report** out);
GL_API gl_status gl_report_from_json(const char* text, gl_report** out);
GL_API void gl_report_free(gl_report* report);
/* 1 iff every check not marked expected-failure passed. */
GL_API int gl_report_ok(const gl_report* report);
GL_API size_t gl_report_check_count(const gl_report* report);
GL_API gl_status gl_report_check(const gl_report* report, size_t index, gl_check_info* out);
/* Removes the named check (returns GL_ERR_CONFIG if absent). */
GL_API gl_status gl_report_remove_check(gl_report* report, const char* name);
GL_API size_t gl_report_missing_count(const gl_report* report);
GL_API gl_status gl_report_to_json(const gl_report* report, char* buf, size_t cap, size_t* needed);
GL_API gl_status gl_report_to_table(const gl_report* report, char* buf, size_t cap,
                                    size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* GAUGELINE_GAUGELINE_H */
