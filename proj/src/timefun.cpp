#include "kgvac/timefun.hpp"

#include <cmath>
#include <sstream>

namespace kgvac {

namespace {

// 4th-order central differences for tabulated profiles.
double fd1(const std::function<double(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}
double fd2(const std::function<double(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) /
           (12 * h * h);
}
double fd3(const std::function<double(double)>& f, double t, double h) {
    return (f(t + 2 * h) - 2 * f(t + h) + 2 * f(t - h) - f(t - 2 * h)) / (2 * h * h * h);
}

} // namespace

double TimeFunction::value(double t) const {
    switch (kind_) {
        case Kind::One: return 1.0;
        case Kind::Constant: return param_;
        case Kind::ExpRate: return std::exp(param_ * t);
        case Kind::Power:
            if (t <= 0.0) throw std::domain_error("TimeFunction: t^p requires t > 0");
            return std::pow(t, param_);
        case Kind::TwoPlusSin: return 2.0 + std::sin(t);
        case Kind::Tabulated: return custom_(t);
    }
    throw std::logic_error("TimeFunction: bad kind");
}

double TimeFunction::d1(double t) const {
    switch (kind_) {
        case Kind::One:
        case Kind::Constant: return 0.0;
        case Kind::ExpRate: return param_ * std::exp(param_ * t);
        case Kind::Power:
            if (t <= 0.0) throw std::domain_error("TimeFunction: t^p requires t > 0");
            return param_ * std::pow(t, param_ - 1.0);
        case Kind::TwoPlusSin: return std::cos(t);
        case Kind::Tabulated: return fd1(custom_, t, 1e-4);
    }
    throw std::logic_error("TimeFunction: bad kind");
}

double TimeFunction::d2(double t) const {
    switch (kind_) {
        case Kind::One:
        case Kind::Constant: return 0.0;
        case Kind::ExpRate: return param_ * param_ * std::exp(param_ * t);
        case Kind::Power:
            if (t <= 0.0) throw std::domain_error("TimeFunction: t^p requires t > 0");
            return param_ * (param_ - 1.0) * std::pow(t, param_ - 2.0);
        case Kind::TwoPlusSin: return -std::sin(t);
        case Kind::Tabulated: return fd2(custom_, t, 1e-3);
    }
    throw std::logic_error("TimeFunction: bad kind");
}

double TimeFunction::d3(double t) const {
    switch (kind_) {
        case Kind::One:
        case Kind::Constant: return 0.0;
        case Kind::ExpRate: return param_ * param_ * param_ * std::exp(param_ * t);
        case Kind::Power:
            if (t <= 0.0) throw std::domain_error("TimeFunction: t^p requires t > 0");
            return param_ * (param_ - 1.0) * (param_ - 2.0) * std::pow(t, param_ - 3.0);
        case Kind::TwoPlusSin: return -std::cos(t);
        case Kind::Tabulated: return fd3(custom_, t, 1e-2);
    }
    throw std::logic_error("TimeFunction: bad kind");
}

std::string TimeFunction::spec_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::One: return "one";
        case Kind::Constant: os << "const:" << param_; return os.str();
        case Kind::ExpRate: os << "exp:" << param_; return os.str();
        case Kind::Power:
            if (param_ == 0.5) return "sqrt_t";
            os << "power:" << param_;
            return os.str();
        case Kind::TwoPlusSin: return "two_plus_sin";
        case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

TimeFunction TimeFunction::parse(const std::string& text) {
    auto split_param = [&](const std::string& prefix) -> std::optional<double> {
        if (text.rfind(prefix + ":", 0) != 0) return std::nullopt;
        std::string rest = text.substr(prefix.size() + 1);
        size_t pos = 0;
        double v = std::stod(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument("bad numeric parameter in '" + text + "'");
        return v;
    };
    if (text == "one") return one();
    if (text == "sqrt_t") return sqrt_t();
    if (text == "two_plus_sin") return two_plus_sin();
    if (auto v = split_param("const")) return constant(*v);
    if (auto v = split_param("exp")) return exp_rate(*v);
    if (auto v = split_param("power")) return power(*v);
    throw std::invalid_argument("unknown time profile '" + text + "'");
}

} // namespace kgvac
