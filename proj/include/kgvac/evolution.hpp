#pragma once

#include <random>

#include "kgvac/jstruct.hpp"
#include "kgvac/phase.hpp"
#include "kgvac/spectral.hpp"

namespace kgvac {

// Classical evolution of Cauchy data from t1 to t2 by classic 4th-order
// Runge-Kutta on the per-mode first-order system (the spatial eigenbasis is
// time-independent for every family).
PhaseVector evolve(const SpacetimeSpec& spec, const PhaseVector& state, double t1, double t2,
                   double step);

// The evolution map as a dense 2n x 2n matrix on (phi, pi).
BlockMatrix2 evolution_matrix(const SpacetimeSpec& spec, double t1, double t2, double step);

// max over random pairs of |Omega(E P1, E P2) - Omega(P1, P2)| / |Omega(P1, P2)|
double symplectic_preservation(const SpacetimeSpec& spec, double t1, double t2, double step,
                               int pairs, std::mt19937_64& rng);

struct TransportResult {
    double transported = 0.0; // ||J(t1) - E^-1 J(t2) E|| / ||J(t1)||
    double naive = 0.0;       // ||J(t1) - J(t2)|| / ||J(t1)||
};
// Conserved-structure transport test for the family's catalog vacuum.
TransportResult transport_residual(const SpacetimeSpec& spec, double t1, double t2,
                                   double step);
// Same transported residual for externally supplied structures.
double transport_residual_for(const SpacetimeSpec& spec, const BlockMatrix2& j1,
                              const BlockMatrix2& j2, double t1, double t2, double step);

} // namespace kgvac
