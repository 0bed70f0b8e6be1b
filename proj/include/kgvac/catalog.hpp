#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgvac/timefun.hpp"

namespace kgvac {

// Spacetime families with known conserved-structure solutions.
enum class Family {
    Static,          // time-independent metric, spatial lapse/metric profiles allowed
    Expanding,       // N(t), static spatial metric
    FrwConformal,    // N(t), a(t), conformally coupled massless field
    FrwMassiveT6,    // N(t), a(t), mass term a^-2 m^2, conformal coupling
    FrwMassiveT7,    // N = a, mass term a^-2 m^2 + (1-6 xi) a^-3 a''
    FrwMassiveT8,    // N = a = exp(H t), mass term a^-2 m^2
    FrwMassiveT9,    // N = 1, a = exp(H t), m^2 = 2 (1-6 xi) H^2
    DeSitterModesL10,   // N = a = exp(H t); Bessel mode solutions
    RadiationModesL10b, // N = a = sqrt(t), xi = 1/6; Airy mode solutions
    DeSitterCosmicL11,  // N = 1, a = exp(H t); Bessel mode solutions
    RadiationCosmicL11b // N = 1, a = sqrt(t); Whittaker mode solutions
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
std::vector<Family> all_families();

// Periodic 1D spatial slice. curvature_offset plays the role of the constant
// xi * Rbar of the spatial metric, entering the operator as a potential.
struct SpatialModel {
    int num_points = 16;
    double length = 6.283185307179586;
    double curvature_offset = 0.0;
    // Static family only: site-dependent lapse N(x) and metric coefficient
    // hbar(x) (both must be strictly positive).
    std::function<double(double)> lapse_profile;
    std::function<double(double)> metric_profile;

    double dx() const { return length / num_points; }
};

struct SpacetimeSpec {
    Family family = Family::Static;
    double mass = 0.0;      // m
    double coupling = 0.0;  // xi
    double hubble = 0.0;    // H, for exp(H t) scale factors
    int dim_weight = 3;     // d in sqrt(h) = a^d sqrt(hbar)
    TimeFunction lapse = TimeFunction::one();
    TimeFunction scale = TimeFunction::one();
    SpatialModel spatial;
    double t_min = -2.0;
    double t_max = 2.0;
};

// Normalizes family-constrained fields (lapse/scale/mass/coupling/interval)
// and validates invariants. Throws std::invalid_argument on bad input.
SpacetimeSpec make_spec(Family family, const SpacetimeSpec& requested);
void validate_spec(const SpacetimeSpec& spec);

// Throws std::domain_error when t is outside the working interval.
void require_in_interval(const SpacetimeSpec& spec, double t);

double lapse_value(const SpacetimeSpec& spec, double t);
double scale_value(const SpacetimeSpec& spec, double t);

// f(t) = -N'/N + d a'/a (0 for the static family).
double friction(const SpacetimeSpec& spec, double t);
double friction_d1(const SpacetimeSpec& spec, double t);
double friction_d2(const SpacetimeSpec& spec, double t);

// Scalar mass term M^2(t) entering the mode potential.
double mass_term(const SpacetimeSpec& spec, double t);

// Time-dependent part of (1/6) N^2 R:
//   a^-2 (a')^2 - a^-1 N^-1 a' N' + a^-1 a''.
double curvature_scalar_term(const SpacetimeSpec& spec, double t);

// Effective coupling multiplying the spacetime curvature in the wave operator
// (families with fixed conformal coupling return 1/6).
double effective_coupling(const SpacetimeSpec& spec);

// Per-mode coefficients as functions of the core Laplacian eigenvalue k2
// (eigenvalue of the discrete -Delta_hbar).
//
// hv_from_core: eigenvalue of the family's conserved spatial operator H_V(t)
//   (for the mode-solution lemmas this is the squared operator; see
//   hv_role_squared).
// wsq_from_core: eigenvalue of the full wave operator w^2(t) driving the
//   classical evolution.
double hv_from_core(const SpacetimeSpec& spec, double t, double k2);
bool hv_role_squared(const SpacetimeSpec& spec);
double wsq_from_core(const SpacetimeSpec& spec, double t, double k2);
double wsq_dt_from_core(const SpacetimeSpec& spec, double t, double k2);

// Frictionless-form mode potential q = w^2 - f'/2 - f^2/4 and its derivative.
double q_mode(const SpacetimeSpec& spec, double t, double k2);
double q_mode_dt(const SpacetimeSpec& spec, double t, double k2);

// H_V(t) = s(t) * (k2 + curvature_offset + hv_extra); s and the log-derivative
// s'/s, (s'/s)' are exposed for analytic block derivatives.
double hv_scale(const SpacetimeSpec& spec, double t);
double hv_scale_logd1(const SpacetimeSpec& spec, double t);
double hv_scale_logd2(const SpacetimeSpec& spec, double t);
double hv_scale_logd3(const SpacetimeSpec& spec, double t);
double hv_extra_shift(const SpacetimeSpec& spec);

struct PositivityReport {
    bool passed = false;
    double margin = 0.0;
    double eps_min = 1e-9;
    std::string condition; // human-readable inequality that was checked
};

// Strict-positivity screening of the family's constant operator part,
// evaluated with the discrete spectrum (min Laplacian eigenvalue is 0).
PositivityReport check_positivity_condition(const SpacetimeSpec& spec, double eps_min = 1e-9);

} // namespace kgvac
