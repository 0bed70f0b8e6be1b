#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace kgvac {

// Scalar function of time with derivatives up to third order.
// Built-in profiles carry analytic derivatives; tabulated ones fall back to
// high-order central differences.
class TimeFunction {
public:
    enum class Kind { One, Constant, ExpRate, Power, TwoPlusSin, Tabulated };

    TimeFunction() : kind_(Kind::One), param_(0.0) {}

    static TimeFunction one() { return TimeFunction(Kind::One, 0.0); }
    static TimeFunction constant(double c) { return TimeFunction(Kind::Constant, c); }
    // exp(rate * t)
    static TimeFunction exp_rate(double rate) { return TimeFunction(Kind::ExpRate, rate); }
    // t^p, defined for t > 0
    static TimeFunction power(double p) { return TimeFunction(Kind::Power, p); }
    static TimeFunction sqrt_t() { return TimeFunction(Kind::Power, 0.5); }
    // 2 + sin(t)
    static TimeFunction two_plus_sin() { return TimeFunction(Kind::TwoPlusSin, 0.0); }
    static TimeFunction tabulated(std::function<double(double)> f) {
        TimeFunction tf(Kind::Tabulated, 0.0);
        tf.custom_ = std::move(f);
        return tf;
    }

    Kind kind() const { return kind_; }
    double param() const { return param_; }

    double value(double t) const;
    double d1(double t) const;
    double d2(double t) const;
    double d3(double t) const;

    // Config-facing name, e.g. "one", "exp:1.5", "sqrt_t", "two_plus_sin".
    std::string spec_string() const;
    static TimeFunction parse(const std::string& text);

    bool operator==(const TimeFunction& o) const {
        return kind_ == o.kind_ && param_ == o.param_;
    }

private:
    TimeFunction(Kind k, double p) : kind_(k), param_(p) {}

    Kind kind_;
    double param_;
    std::function<double(double)> custom_;
};

} // namespace kgvac
