#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gamedyn/dynamics.hpp"
#include "gamedyn/payoffs.hpp"
#include "gamedyn/simplex.hpp"

namespace gamedyn {

struct IntegratorConfig {
    double dt = 1e-3;      // fixed RK4 step, must be <= 1e-2
    double horizon = 500.0;
    int record_every = 1;  // steps between recorded samples
};

void validate(const IntegratorConfig& cfg);

// Uniformly sampled record of a run. All columns share the same length; the
// derivative columns are exact vector-field / signal-derivative evaluations
// at the sample instants, not finite differences.
struct Trajectory {
    int n = 0;
    ModelKind kind = ModelKind::RD;
    ModelParams params;
    std::vector<double> times;
    std::vector<SimplexPoint> strategies;
    std::vector<ModelState> states;
    std::vector<Vec> payoffs;
    std::vector<Vec> payoff_derivatives;
    std::vector<TangentVector> strategy_derivatives;

    std::size_t samples() const { return times.size(); }
};

// Classical fixed-step RK4 on the full model state. Game-mode payoffs are
// re-evaluated at every internal stage from that stage's strategy read-out,
// and the strategy block passes through safeguard() after each step.
// Throws IntegrationDivergedError (carrying the failure time) if the state
// leaves the simplex neighbourhood.
Trajectory integrate(ModelKind kind, const ModelParams& params, const SimplexPoint& x0,
                     const PayoffSource& src, const IntegratorConfig& cfg);

struct ConvergenceResult {
    double final_dist;  // max distance to target over the trailing window
    bool converged;     // final_dist < 1e-3
};

ConvergenceResult convergence_check(const Trajectory& traj, const SimplexPoint& target,
                                    double tail_fraction);

// CSV schema: t,x_1..x_n,p_1..p_n,xdot_1..xdot_n,pdot_1..pdot_n with floats
// rendered at 17 significant digits.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

}  // namespace gamedyn
