#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gamedyn/integrator.hpp"

namespace gamedyn {

// Trapezoidal cumulative integral of y over the trajectory's time grid.
// All integral functionals below use this quadrature on the recorded grid.
Vec cumulative_trapezoid(const std::vector<double>& t, const Vec& y);

// R_t(anchor) = integral of p(s)^T (anchor - x(s)) ds, as a time series.
Vec regret_series(const Trajectory& traj, const SimplexPoint& anchor);

// (1/t) * integral of p(s)^T x(s) ds; the t = 0 entry is the instantaneous
// reward (the limit value).
Vec average_reward(const Trajectory& traj);

struct RegretReport {
    std::vector<Vec> vertex_regret_curves;  // one per vertex, aligned to times
    double sup_regret;                      // sup over vertices and time
    std::optional<double> storage_bound;    // certificate, finite-regret models only
    bool bounded_verdict;                   // sup <= storage_bound + slack
};

// Vertex regret curves plus the model's storage certificate evaluated at the
// initial condition:
//   RD / FTRL     max_i -log x0_i
//   DP            max_i 0.5 ||x0 - e_i||^2
//   ShoFtrl       max_i (-log x0_i + 0.5 ||x0 - e_i||^2)
//   ShoDp         max_i ||x0 - e_i||^2
// Other models carry no certificate and get no bound.
RegretReport regret_report(const Trajectory& traj, ModelKind kind, const ModelParams& params,
                           const SimplexPoint& x0, double slack = 1e-3);

std::optional<double> storage_bound(ModelKind kind, const SimplexPoint& x0);

struct EquilibriumPair {
    Vec p_star;
    SimplexPoint x_star;
};

struct PassivityReport {
    std::vector<Vec> plain_curves;  // <p, x - e_i>_t per vertex
    Vec delta_curve;                // <xdot, pdot>_t
    std::optional<Vec> ei_curve;    // <p - p*, x - x*>_t when a pair is given
    std::optional<EquilibriumPair> equilibrium;
    Vec plain_minima;
    double delta_min;
    std::optional<double> ei_min;
};

PassivityReport passivity_report(const Trajectory& traj,
                                 const std::optional<EquilibriumPair>& equilibrium = std::nullopt);

enum class StorageKind { KlToAnchor, HalfSqDist, FtrlFenchel };

// Storage function V with anchor xbar; aux_anchor adds 0.5 ||xi - xibar||^2.
//   KlToAnchor    sum_i xbar_i log(xbar_i / x_i)   (coordinates clamped at 1e-12)
//   HalfSqDist    0.5 ||x - xbar||^2
//   FtrlFenchel   log sum exp(z) - (z^T xbar - h(xbar)),  h(y) = sum y log y
struct StorageFn {
    StorageKind kind;
    Vec anchor;
    std::optional<Vec> aux_anchor;
};

double storage_eval(const StorageFn& fn, const ModelState& state);

// The certificate storage the finite-regret models pair with; throws for
// models without one.
StorageFn matching_storage(ModelKind kind, const Vec& anchor);

// Max over sample times of V(state(t)) - V(state(0)) - <p, x - anchor>_t.
// Nonpositive up to quadrature error when the storage inequality holds.
double dissipation_check(const Trajectory& traj, ModelKind kind, const ModelParams& params,
                         const StorageFn& fn);

// Pointwise phat^T (diag(x) - x x^T) phat along an RDLatency trajectory.
Vec qt_integrand(const Trajectory& traj);

// Least-squares slope of y against t over samples [from, end).
double least_squares_slope(const std::vector<double>& t, const Vec& y, std::size_t from);

// True when the last quarter of the series introduces no running minimum
// below the previous minimum minus tol.
bool running_min_stabilizes(const Vec& y, double tol);

// --- Example-1 reference policies (evaluated trajectories, not models) ---

using PolicyFn = std::function<SimplexPoint(double)>;

Trajectory policy_trajectory(const PayoffSignal& signal, const PolicyFn& policy,
                             const IntegratorConfig& cfg);

// Switching policy: e_1 while sin(t) >= 0.5, else e_2.
PolicyFn example1_opt_policy();
PolicyFn fixed_policy(SimplexPoint x);

// --- curve export ---

struct NamedSeries {
    std::string name;
    const Vec* values;
};

void write_series_csv(const std::vector<double>& t, const std::vector<NamedSeries>& columns,
                      const std::string& path);

}  // namespace gamedyn
