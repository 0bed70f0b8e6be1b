#include "kgvac/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kgvac {

namespace {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("scenario parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(col) + ": " + msg) {}
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line, int col) {
    try {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ParseError(line, col, "expected a number, got '" + v + "'");
    }
}

int parse_int(const std::string& v, int line, int col) {
    try {
        size_t pos = 0;
        long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return static_cast<int>(d);
    } catch (const std::exception&) {
        throw ParseError(line, col, "expected an integer, got '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line, int col) {
    try {
        size_t pos = 0;
        unsigned long long d = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ParseError(line, col, "expected an unsigned integer, got '" + v + "'");
    }
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    bool saw_transport_start = false, saw_transport_stop = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(lineno, static_cast<int>(raw.find('[')) + 1,
                                 "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "spacetime" && section != "lattice" &&
                section != "time" && section != "suite" && section != "vacuum")
                throw ParseError(lineno, 1, "unknown section '" + section + "'");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, 1, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        int col = static_cast<int>(raw.find(key)) + 1;
        if (value.empty()) throw ParseError(lineno, col, "empty value for '" + key + "'");

        auto unknown = [&]() -> ParseError {
            return ParseError(lineno, col,
                              "unknown key '" + key + "' in section [" + section + "]");
        };
        if (section == "scenario") {
            if (key == "name") s.name = value;
            else throw unknown();
        } else if (section == "spacetime") {
            if (key == "family") {
                auto f = family_from_name(value);
                if (!f) throw ParseError(lineno, col, "unknown family '" + value + "'");
                s.family = *f;
            } else if (key == "mass") s.mass = parse_double(value, lineno, col);
            else if (key == "coupling") s.coupling = parse_double(value, lineno, col);
            else if (key == "hubble") s.hubble = parse_double(value, lineno, col);
            else if (key == "dim_weight") s.dim_weight = parse_int(value, lineno, col);
            else if (key == "lapse") s.lapse = value;
            else if (key == "scale") s.scale = value;
            else throw unknown();
        } else if (section == "lattice") {
            if (key == "points") s.points = parse_int(value, lineno, col);
            else if (key == "length") s.length = parse_double(value, lineno, col);
            else if (key == "curvature_offset")
                s.curvature_offset = parse_double(value, lineno, col);
            else if (key == "lapse_profile") s.lapse_profile = value;
            else if (key == "metric_profile") s.metric_profile = value;
            else throw unknown();
        } else if (section == "time") {
            if (key == "start") s.start = parse_double(value, lineno, col);
            else if (key == "stop") s.stop = parse_double(value, lineno, col);
            else if (key == "samples") s.samples = parse_int(value, lineno, col);
            else throw unknown();
        } else if (section == "suite") {
            if (key == "checks") s.checks = value;
            else if (key == "rk4_step") s.rk4_step = parse_double(value, lineno, col);
            else if (key == "tolerance_scale")
                s.tolerance_scale = parse_double(value, lineno, col);
            else if (key == "seed") s.seed = parse_u64(value, lineno, col);
            else if (key == "transport_start") {
                s.transport_start = parse_double(value, lineno, col);
                saw_transport_start = true;
            } else if (key == "transport_stop") {
                s.transport_stop = parse_double(value, lineno, col);
                saw_transport_stop = true;
            } else if (key == "probe_modes") s.probe_modes = parse_int(value, lineno, col);
            else throw unknown();
        } else if (section == "vacuum") {
            if (key == "c1") s.c1 = parse_double(value, lineno, col);
            else if (key == "c2") s.c2 = parse_double(value, lineno, col);
            else if (key == "c3") s.c3 = parse_double(value, lineno, col);
            else throw unknown();
        } else {
            throw ParseError(lineno, col, "key outside of any section");
        }
    }
    if (!saw_transport_start) s.transport_start = s.start;
    if (!saw_transport_stop)
        s.transport_stop = std::min(s.stop, s.transport_start + 1.0);
    if (s.samples < 2) throw std::invalid_argument("scenario needs samples >= 2");
    if (!(s.start < s.stop)) throw std::invalid_argument("scenario needs start < stop");
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream os;
    os.precision(17);
    os << "[scenario]\nname = " << s.name << "\n\n";
    os << "[spacetime]\nfamily = " << family_name(s.family) << "\nmass = " << s.mass
       << "\ncoupling = " << s.coupling << "\nhubble = " << s.hubble
       << "\ndim_weight = " << s.dim_weight << "\nlapse = " << s.lapse
       << "\nscale = " << s.scale << "\n\n";
    os << "[lattice]\npoints = " << s.points << "\nlength = " << s.length
       << "\ncurvature_offset = " << s.curvature_offset
       << "\nlapse_profile = " << s.lapse_profile
       << "\nmetric_profile = " << s.metric_profile << "\n\n";
    os << "[time]\nstart = " << s.start << "\nstop = " << s.stop
       << "\nsamples = " << s.samples << "\n\n";
    os << "[suite]\nchecks = " << s.checks << "\nrk4_step = " << s.rk4_step
       << "\ntolerance_scale = " << s.tolerance_scale << "\nseed = " << s.seed
       << "\ntransport_start = " << s.transport_start
       << "\ntransport_stop = " << s.transport_stop
       << "\nprobe_modes = " << s.probe_modes << "\n";
    if (s.c1 || s.c2 || s.c3) {
        os << "\n[vacuum]\n";
        if (s.c1) os << "c1 = " << *s.c1 << "\n";
        if (s.c2) os << "c2 = " << *s.c2 << "\n";
        if (s.c3) os << "c3 = " << *s.c3 << "\n";
    }
    return os.str();
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::function<double(double)> parse_profile(const std::string& text, double length) {
    if (text == "uniform") return nullptr;
    auto parse2 = [&](const std::string& prefix) -> std::optional<std::pair<double, double>> {
        if (text.rfind(prefix + ":", 0) != 0) return std::nullopt;
        std::string rest = text.substr(prefix.size() + 1);
        size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("profile '" + text + "' needs base and amplitude");
        double base = std::stod(rest.substr(0, colon));
        double amp = std::stod(rest.substr(colon + 1));
        return std::make_pair(base, amp);
    };
    const double two_pi = 6.283185307179586;
    if (auto p = parse2("sin_bump")) {
        double base = p->first, amp = p->second;
        return [base, amp, length, two_pi](double x) {
            return base + amp * std::sin(two_pi * x / length);
        };
    }
    if (auto p = parse2("cos_bump")) {
        double base = p->first, amp = p->second;
        return [base, amp, length, two_pi](double x) {
            return base + amp * std::cos(two_pi * x / length);
        };
    }
    throw std::invalid_argument("unknown spatial profile '" + text + "'");
}

SpacetimeSpec to_spec(const Scenario& s) {
    SpacetimeSpec req;
    req.mass = s.mass;
    req.coupling = s.coupling;
    req.hubble = s.hubble;
    req.dim_weight = s.dim_weight;
    req.lapse = TimeFunction::parse(s.lapse);
    req.scale = TimeFunction::parse(s.scale);
    req.spatial.num_points = s.points;
    req.spatial.length = s.length;
    req.spatial.curvature_offset = s.curvature_offset;
    req.spatial.lapse_profile = parse_profile(s.lapse_profile, s.length);
    req.spatial.metric_profile = parse_profile(s.metric_profile, s.length);
    req.t_min = s.start;
    req.t_max = s.stop;
    return make_spec(s.family, req);
}

} // namespace kgvac
