#include "kgvac/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kgvac {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Static, "static"},
    {Family::Expanding, "expanding"},
    {Family::FrwConformal, "frw_conformal"},
    {Family::FrwMassiveT6, "frw_t6"},
    {Family::FrwMassiveT7, "frw_t7"},
    {Family::FrwMassiveT8, "frw_t8"},
    {Family::FrwMassiveT9, "frw_t9"},
    {Family::DeSitterModesL10, "l10"},
    {Family::RadiationModesL10b, "l10b"},
    {Family::DeSitterCosmicL11, "l11"},
    {Family::RadiationCosmicL11b, "l11b"},
};

bool uses_sqrt_scale(Family f) {
    return f == Family::RadiationModesL10b || f == Family::RadiationCosmicL11b;
}

bool is_mode_family(Family f) {
    return f == Family::DeSitterModesL10 || f == Family::RadiationModesL10b ||
           f == Family::DeSitterCosmicL11 || f == Family::RadiationCosmicL11b;
}

// log-derivative helpers: g = u'/u, g' and g'' from u's derivatives
double logd1(const TimeFunction& u, double t) {
    return u.d1(t) / u.value(t);
}
double logd2(const TimeFunction& u, double t) {
    double g = logd1(u, t);
    return u.d2(t) / u.value(t) - g * g;
}
double logd3(const TimeFunction& u, double t) {
    double v = u.value(t);
    double g = u.d1(t) / v;
    double r2 = u.d2(t) / v;
    return u.d3(t) / v - 3.0 * g * r2 + 2.0 * g * g * g;
}

} // namespace

const char* family_name(Family f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi.name;
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& fi : kFamilies)
        if (name == fi.name) return fi.family;
    return std::nullopt;
}

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto& fi : kFamilies) out.push_back(fi.family);
    return out;
}

SpacetimeSpec make_spec(Family family, const SpacetimeSpec& requested) {
    SpacetimeSpec s = requested;
    s.family = family;
    switch (family) {
        case Family::Static:
            s.lapse = TimeFunction::one();
            s.scale = TimeFunction::one();
            break;
        case Family::Expanding:
            s.scale = TimeFunction::one();
            break;
        case Family::FrwConformal:
            s.coupling = 1.0 / 6.0;
            s.mass = 0.0;
            break;
        case Family::FrwMassiveT6:
            s.coupling = 1.0 / 6.0;
            break;
        case Family::FrwMassiveT7:
            s.lapse = s.scale;
            break;
        case Family::FrwMassiveT8:
        case Family::DeSitterModesL10:
            s.scale = TimeFunction::exp_rate(s.hubble);
            s.lapse = s.scale;
            break;
        case Family::FrwMassiveT9: {
            s.scale = TimeFunction::exp_rate(s.hubble);
            s.lapse = TimeFunction::one();
            double m2 = 2.0 * (1.0 - 6.0 * s.coupling) * s.hubble * s.hubble;
            if (m2 < 0.0)
                throw std::invalid_argument(
                    "frw_t9: forced m^2 = 2(1-6 xi)H^2 is negative; requires xi <= 1/6");
            s.mass = std::sqrt(m2);
            break;
        }
        case Family::DeSitterCosmicL11:
            s.scale = TimeFunction::exp_rate(s.hubble);
            s.lapse = TimeFunction::one();
            break;
        case Family::RadiationModesL10b:
            s.scale = TimeFunction::sqrt_t();
            s.lapse = s.scale;
            s.coupling = 1.0 / 6.0;
            break;
        case Family::RadiationCosmicL11b:
            s.scale = TimeFunction::sqrt_t();
            s.lapse = TimeFunction::one();
            break;
    }
    if (uses_sqrt_scale(family) && s.t_min <= 0.0) {
        s.t_min = 0.1;
        s.t_max = 10.0;
    }
    validate_spec(s);
    return s;
}

void validate_spec(const SpacetimeSpec& spec) {
    if (spec.spatial.num_points < 2)
        throw std::invalid_argument("spatial model needs at least 2 lattice sites");
    if (!(spec.spatial.length > 0.0))
        throw std::invalid_argument("spatial length must be positive");
    if (spec.mass < 0.0)
        throw std::invalid_argument("mass must be nonnegative");
    if (spec.dim_weight < 1)
        throw std::invalid_argument("dim_weight must be >= 1");
    if (!(spec.t_min < spec.t_max))
        throw std::invalid_argument("empty working time interval");
    bool frw_like = spec.family != Family::Static && spec.family != Family::Expanding;
    if (frw_like && spec.dim_weight != 3)
        throw std::invalid_argument("FRW-type families require dim_weight = 3");
    if (uses_sqrt_scale(spec.family) && spec.t_min <= 0.0)
        throw std::invalid_argument("radiation-era families require t > 0");
    if (uses_sqrt_scale(spec.family) && !(spec.mass > 0.0))
        throw std::invalid_argument("radiation-era mode families require m > 0");
    if (spec.family != Family::Static &&
        (spec.spatial.lapse_profile || spec.spatial.metric_profile))
        throw std::invalid_argument("spatial profiles are supported by the static family only");
    // sample the time functions across the interval
    for (int i = 0; i <= 8; ++i) {
        double t = spec.t_min + (spec.t_max - spec.t_min) * i / 8.0;
        if (!(spec.lapse.value(t) > 0.0))
            throw std::invalid_argument("lapse must be strictly positive on the working interval");
        if (!(spec.scale.value(t) > 0.0))
            throw std::invalid_argument("scale factor must be strictly positive on the working interval");
    }
    if (spec.spatial.lapse_profile || spec.spatial.metric_profile) {
        double dx = spec.spatial.dx();
        for (int i = 0; i < spec.spatial.num_points; ++i) {
            double x = i * dx;
            if (spec.spatial.lapse_profile && !(spec.spatial.lapse_profile(x) > 0.0))
                throw std::invalid_argument("lapse profile must be strictly positive");
            if (spec.spatial.metric_profile && !(spec.spatial.metric_profile(x) > 0.0))
                throw std::invalid_argument("metric profile must be strictly positive");
        }
    }
}

void require_in_interval(const SpacetimeSpec& spec, double t) {
    if (t < spec.t_min - 1e-12 || t > spec.t_max + 1e-12) {
        std::ostringstream os;
        os << "t = " << t << " outside working interval [" << spec.t_min << ", "
           << spec.t_max << "] of family " << family_name(spec.family);
        throw std::domain_error(os.str());
    }
}

double lapse_value(const SpacetimeSpec& spec, double t) { return spec.lapse.value(t); }
double scale_value(const SpacetimeSpec& spec, double t) { return spec.scale.value(t); }

double friction(const SpacetimeSpec& spec, double t) {
    if (spec.family == Family::Static) return 0.0;
    require_in_interval(spec, t);
    return -logd1(spec.lapse, t) + spec.dim_weight * logd1(spec.scale, t);
}

double friction_d1(const SpacetimeSpec& spec, double t) {
    if (spec.family == Family::Static) return 0.0;
    require_in_interval(spec, t);
    return -logd2(spec.lapse, t) + spec.dim_weight * logd2(spec.scale, t);
}

double friction_d2(const SpacetimeSpec& spec, double t) {
    if (spec.family == Family::Static) return 0.0;
    require_in_interval(spec, t);
    return -logd3(spec.lapse, t) + spec.dim_weight * logd3(spec.scale, t);
}

double mass_term(const SpacetimeSpec& spec, double t) {
    double m2 = spec.mass * spec.mass;
    switch (spec.family) {
        case Family::Static:
        case Family::Expanding:
            return m2;
        case Family::FrwConformal:
            return 0.0;
        case Family::FrwMassiveT6:
        case Family::FrwMassiveT8: {
            require_in_interval(spec, t);
            double a = spec.scale.value(t);
            return m2 / (a * a);
        }
        case Family::FrwMassiveT7: {
            require_in_interval(spec, t);
            double a = spec.scale.value(t);
            return m2 / (a * a) +
                   (1.0 - 6.0 * spec.coupling) * spec.scale.d2(t) / (a * a * a);
        }
        case Family::FrwMassiveT9:
            return 2.0 * (1.0 - 6.0 * spec.coupling) * spec.hubble * spec.hubble;
        case Family::DeSitterModesL10:
        case Family::RadiationModesL10b:
        case Family::DeSitterCosmicL11:
        case Family::RadiationCosmicL11b:
            return m2;
    }
    throw std::logic_error("mass_term: bad family");
}

double curvature_scalar_term(const SpacetimeSpec& spec, double t) {
    if (spec.family == Family::Static) return 0.0;
    require_in_interval(spec, t);
    double ga = logd1(spec.scale, t);
    double gn = logd1(spec.lapse, t);
    double a = spec.scale.value(t);
    return ga * ga - ga * gn + spec.scale.d2(t) / a;
}

double effective_coupling(const SpacetimeSpec& spec) { return spec.coupling; }

bool hv_role_squared(const SpacetimeSpec& spec) { return is_mode_family(spec.family); }

double hv_scale(const SpacetimeSpec& spec, double t) {
    double N = spec.lapse.value(t);
    double a = spec.scale.value(t);
    switch (spec.family) {
        case Family::Static: return 1.0;
        case Family::Expanding: return N * N;
        case Family::FrwConformal:
        case Family::FrwMassiveT6: return N * N / (a * a);
        case Family::FrwMassiveT7:
        case Family::FrwMassiveT8: return 1.0;
        case Family::FrwMassiveT9: return 1.0 / (a * a);
        default: return 1.0;
    }
}

double hv_scale_logd1(const SpacetimeSpec& spec, double t) {
    switch (spec.family) {
        case Family::Expanding: return 2.0 * logd1(spec.lapse, t);
        case Family::FrwConformal:
        case Family::FrwMassiveT6:
            return 2.0 * (logd1(spec.lapse, t) - logd1(spec.scale, t));
        case Family::FrwMassiveT9: return -2.0 * logd1(spec.scale, t);
        default: return 0.0;
    }
}

double hv_scale_logd2(const SpacetimeSpec& spec, double t) {
    switch (spec.family) {
        case Family::Expanding: return 2.0 * logd2(spec.lapse, t);
        case Family::FrwConformal:
        case Family::FrwMassiveT6:
            return 2.0 * (logd2(spec.lapse, t) - logd2(spec.scale, t));
        case Family::FrwMassiveT9: return -2.0 * logd2(spec.scale, t);
        default: return 0.0;
    }
}

double hv_scale_logd3(const SpacetimeSpec& spec, double t) {
    switch (spec.family) {
        case Family::Expanding: return 2.0 * logd3(spec.lapse, t);
        case Family::FrwConformal:
        case Family::FrwMassiveT6:
            return 2.0 * (logd3(spec.lapse, t) - logd3(spec.scale, t));
        case Family::FrwMassiveT9: return -2.0 * logd3(spec.scale, t);
        default: return 0.0;
    }
}

double hv_extra_shift(const SpacetimeSpec& spec) {
    double m2 = spec.mass * spec.mass;
    double H2 = spec.hubble * spec.hubble;
    switch (spec.family) {
        case Family::Static:
        case Family::FrwConformal:
        case Family::FrwMassiveT9:
            return 0.0;
        case Family::Expanding:
        case Family::FrwMassiveT6:
        case Family::FrwMassiveT7:
            return m2;
        case Family::FrwMassiveT8:
            return m2 + (6.0 * spec.coupling - 1.0) * H2;
        case Family::DeSitterModesL10:
            return (6.0 * spec.coupling - 1.0) * H2;
        case Family::RadiationModesL10b:
        case Family::DeSitterCosmicL11:
        case Family::RadiationCosmicL11b:
            return 0.0;
    }
    throw std::logic_error("hv_extra_shift: bad family");
}

double hv_from_core(const SpacetimeSpec& spec, double t, double k2) {
    if (spec.family == Family::Static) return k2;
    require_in_interval(spec, t);
    return hv_scale(spec, t) * (k2 + spec.spatial.curvature_offset + hv_extra_shift(spec));
}

double wsq_from_core(const SpacetimeSpec& spec, double t, double k2) {
    if (spec.family == Family::Static) return k2;
    require_in_interval(spec, t);
    double N = spec.lapse.value(t);
    double a = spec.scale.value(t);
    double base = N * N / (a * a) * (k2 + spec.spatial.curvature_offset);
    return base + N * N * mass_term(spec, t) +
           6.0 * effective_coupling(spec) * curvature_scalar_term(spec, t);
}

double wsq_dt_from_core(const SpacetimeSpec& spec, double t, double k2) {
    if (spec.family == Family::Static) return 0.0;
    require_in_interval(spec, t);
    double N = spec.lapse.value(t);
    double a = spec.scale.value(t);
    double gn = logd1(spec.lapse, t);
    double ga = logd1(spec.scale, t);
    double base_dt = N * N / (a * a) * 2.0 * (gn - ga) * (k2 + spec.spatial.curvature_offset);

    // d/dt [ N^2 M^2(t) ]
    double m2 = spec.mass * spec.mass;
    double nm_dt = 0.0;
    switch (spec.family) {
        case Family::Expanding:
            nm_dt = 2.0 * gn * N * N * m2;
            break;
        case Family::FrwConformal:
            break;
        case Family::FrwMassiveT6:
            // N^2 M^2 = N^2 a^-2 m^2
            nm_dt = N * N / (a * a) * m2 * 2.0 * (gn - ga);
            break;
        case Family::FrwMassiveT7: {
            // N = a: N^2 M^2 = m^2 + (1-6 xi) a''/a
            double c = 1.0 - 6.0 * spec.coupling;
            nm_dt = c * (spec.scale.d3(t) / a - (spec.scale.d2(t) / a) * ga);
            break;
        }
        case Family::FrwMassiveT8:
        case Family::FrwMassiveT9:
        case Family::DeSitterCosmicL11:
        case Family::RadiationCosmicL11b:
            // N^2 M^2 constant in time
            nm_dt = 0.0;
            break;
        case Family::DeSitterModesL10:
        case Family::RadiationModesL10b:
            // N = a: N^2 M^2 = a^2 m^2
            nm_dt = 2.0 * ga * a * a * m2;
            break;
        default:
            nm_dt = 0.0;
            break;
    }

    // d/dt of the curvature scalar term
    double ga2 = logd2(spec.scale, t);
    double gn2 = logd2(spec.lapse, t);
    double r2 = spec.scale.d2(t) / a; // a''/a
    double cst_dt = 2.0 * ga * ga2 - ga2 * gn - ga * gn2 +
                    (spec.scale.d3(t) / a - r2 * ga);
    return base_dt + nm_dt + 6.0 * effective_coupling(spec) * cst_dt;
}

double q_mode(const SpacetimeSpec& spec, double t, double k2) {
    double f = friction(spec, t);
    return wsq_from_core(spec, t, k2) - 0.5 * friction_d1(spec, t) - 0.25 * f * f;
}

double q_mode_dt(const SpacetimeSpec& spec, double t, double k2) {
    double f = friction(spec, t);
    double fd = friction_d1(spec, t);
    return wsq_dt_from_core(spec, t, k2) - 0.5 * friction_d2(spec, t) - 0.5 * f * fd;
}

PositivityReport check_positivity_condition(const SpacetimeSpec& spec, double eps_min) {
    PositivityReport rep;
    rep.eps_min = eps_min;
    double c = spec.spatial.curvature_offset;
    double m2 = spec.mass * spec.mass;
    double H2 = spec.hubble * spec.hubble;
    switch (spec.family) {
        case Family::Static:
        case Family::Expanding:
            rep.margin = c + m2;
            rep.condition = "xi*Rbar + m^2 > eps";
            break;
        case Family::FrwConformal:
            rep.margin = c;
            rep.condition = "Rbar/6 > eps";
            break;
        case Family::FrwMassiveT6:
        case Family::FrwMassiveT7:
            rep.margin = c + m2;
            rep.condition = "xi*Rbar + m^2 > eps";
            break;
        case Family::FrwMassiveT8:
            rep.margin = c + m2 + (6.0 * spec.coupling - 1.0) * H2;
            rep.condition = "xi*Rbar + m^2 + (6 xi - 1) H^2 > eps";
            break;
        case Family::FrwMassiveT9:
            rep.margin = c;
            rep.condition = "xi*Rbar > eps";
            break;
        case Family::DeSitterModesL10:
            rep.margin = c + (6.0 * spec.coupling - 1.0) * H2;
            rep.condition = "xi*Rbar + (6 xi - 1) H^2 > eps";
            break;
        case Family::RadiationModesL10b:
            rep.margin = c;
            rep.condition = "xi*Rbar > eps (and m > 0)";
            break;
        case Family::DeSitterCosmicL11: {
            double M2 = m2 + 2.0 * (6.0 * spec.coupling - 9.0 / 8.0) * H2;
            rep.margin = std::min(M2, c);
            rep.condition = "min(m^2 + 2(6 xi - 9/8) H^2, xi*Rbar) > eps";
            break;
        }
        case Family::RadiationCosmicL11b:
            rep.margin = std::min(m2, c + m2);
            rep.condition = "m^2 > eps (and xi*Rbar >= 0)";
            break;
    }
    rep.passed = rep.margin > eps_min;
    return rep;
}

} // namespace kgvac
