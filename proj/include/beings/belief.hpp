#pragma once

#include <Eigen/Dense>

#include "beings/core.hpp"

namespace beings {

// Per-cell probability masses of the goal image's source location.
struct GridBelief {
    CellGrid grid;
    Eigen::VectorXd masses;
};

inline GridBelief init_uniform(const CellGrid& grid) {
    const int m = grid.cell_count();
    return {grid, Eigen::VectorXd::Constant(m, 1.0 / m)};
}

inline GridBelief init_with_masses(const CellGrid& grid, Eigen::VectorXd masses) {
    if (masses.size() != grid.cell_count())
        throw std::invalid_argument("init_with_masses: size mismatch");
    if ((masses.array() < 0.0).any() || std::abs(masses.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("init_with_masses: masses must be >= 0 and sum to 1");
    return {grid, std::move(masses)};
}

// Posterior revision after an unsuccessful observation in `observed_cell`
// with detection probability q: the observed cell's mass is scaled by
// (1-q)/(1-p*q), every other cell by 1/(1-p*q). Implemented as "scale the
// observed cell by (1-q), renormalize", which is the same map without the
// catastrophic cancellation of 1-p*q when p*q approaches 1. q is capped at
// 1-1e-6 so the posterior never collapses on a near-duplicate view.
inline GridBelief bayes_update(const GridBelief& belief, int observed_cell, double q) {
    if (!std::isfinite(q) || q < 0.0 || q > 1.0)
        throw std::invalid_argument("bayes_update: q must be in [0,1]");
    if (observed_cell < 0 || observed_cell >= belief.masses.size())
        throw std::out_of_range("bayes_update: bad cell id");

    const double p = belief.masses[observed_cell];
    if (p * (1.0 - q) + (1.0 - p) <= 0.0)
        throw std::runtime_error(
            "bayes_update: degenerate evidence (certain detection but target not found)");

    const double q_eff = std::min(q, 1.0 - 1e-6);
    if (q_eff == 0.0 || p == 0.0) return belief;
    GridBelief out = belief;
    out.masses[observed_cell] *= 1.0 - q_eff;
    out.masses /= out.masses.sum();
    return out;
}

// Mass of the cell containing the pose; 0 outside the footprint.
inline double prob_mass(const GridBelief& belief, const Pose& pose) {
    const auto idx = try_cell_index(belief.grid, pose);
    return idx ? belief.masses[*idx] : 0.0;
}

}  // namespace beings
