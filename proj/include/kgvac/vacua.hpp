#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "kgvac/conservation.hpp"
#include "kgvac/jstruct.hpp"

namespace kgvac::vacua {

// Constants selecting a solution branch of the mode families. When
// abs_square_default is set, the branch is |u|^2 of the distinguished complex
// mode solution with the exact normalization fixed by its Wronskian (the
// family default); otherwise (c1, c2, c3) are used verbatim.
struct ModeConstants {
    std::complex<double> c1{0.0, 0.0};
    std::complex<double> c2{0.0, 0.0};
    std::complex<double> c3{0.0, 0.0};
    bool abs_square_default = false;
};

ModeConstants default_constants(const SpacetimeSpec& spec, double kappa_sq);

// Per-mode block values at one time with analytic time derivatives.
struct ModeSample {
    double Y = 0.0, dY = 0.0, d2Y = 0.0, d3Y = 0.0;
    double Z = 0.0, dZ = 0.0, d2Z = 0.0;
};

// Evaluates the family's solution branch for one mode.
class ModeSolution {
public:
    ModeSolution(const SpacetimeSpec& spec, double kappa_sq,
                 std::optional<ModeConstants> constants = std::nullopt);
    ModeSample eval(double t) const;
    const ModeConstants& constants() const { return constants_; }
    const std::string& provenance() const { return provenance_; }

private:
    SpacetimeSpec spec_;
    double kappa_sq_;
    ModeConstants constants_;
    std::string provenance_;
    double lam_ = 0.0;       // family mode parameter (sqrt of the conserved
                             // operator eigenvalue where the family takes one)
    double mass_like_ = 0.0; // M for the cosmic de Sitter branch
    double whittaker_scale_ = 0.0;

    ModeSample eval_closed_form(double t) const;
    ModeSample eval_modes(double t) const;
};

// Blocks of the family's conserved structure at time t (orientation selected).
ComplexStructureBlocks catalog_blocks(const SpacetimeSpec& spec, const SpectralOperator& op,
                                      double t);

// Per-mode trajectory with analytic derivatives on a time grid.
ModeTrajectory make_mode_trajectory(const SpacetimeSpec& spec, double kappa_sq,
                                    const std::vector<double>& times,
                                    std::optional<ModeConstants> constants = std::nullopt);

// General solution of the time-independent single-mode problem:
// Y(t) = 2 Re(c1 e^{2 i w t}) / w + sqrt(1 + 4 |c1|^2) / w.
double static_general_Y(double w, std::complex<double> c1, double t);
ModeTrajectory static_general_trajectory(double w, std::complex<double> c1,
                                         const std::vector<double>& times);

// Least-squares scale calibration against the quadratic mode equation at the
// reference times: Y -> s Y with s^2 = 2 sum(Q) / sum(Q^2).
struct Calibration {
    double scale = 1.0;
    double residual_before = 0.0;
    double residual_after = 0.0;
};
Calibration calibrate_scale(const SpacetimeSpec& spec, double kappa_sq,
                            const ModeConstants& direction,
                            const std::vector<double>& ref_times);

} // namespace kgvac::vacua
