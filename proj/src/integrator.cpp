#include "gamedyn/integrator.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace gamedyn {

void validate(const IntegratorConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::domain_error("IntegratorConfig: dt must be > 0");
    if (cfg.dt > 1e-2) throw std::domain_error("IntegratorConfig: dt must be <= 1e-2");
    if (!(cfg.horizon > 0.0)) throw std::domain_error("IntegratorConfig: horizon must be > 0");
    if (cfg.horizon / cfg.dt > 1e9) throw std::domain_error("IntegratorConfig: too many steps");
    if (cfg.record_every < 1) throw std::domain_error("IntegratorConfig: record_every must be >= 1");
}

namespace {

void state_axpy(ModelState& acc, double c, const ModelState& d) {
    axpy(acc.x, c, d.x);
    axpy(acc.z, c, d.z);
    axpy(acc.xi, c, d.xi);
    axpy(acc.phat, c, d.phat);
}

ModelState state_step(const ModelState& s, double c, const ModelState& d) {
    ModelState out = s;
    state_axpy(out, c, d);
    return out;
}

}  // namespace

Trajectory integrate(ModelKind kind, const ModelParams& params, const SimplexPoint& x0,
                     const PayoffSource& src, const IntegratorConfig& cfg) {
    validate(cfg);
    validate(params);
    const int n = source_dim(src);

    Trajectory traj;
    traj.n = n;
    traj.kind = kind;
    traj.params = params;

    ModelState state = init_state(kind, n, params, x0);
    const long steps = std::lround(cfg.horizon / cfg.dt);
    const double dt = cfg.dt;

    traj.times.reserve(steps / cfg.record_every + 2);

    auto stage_field = [&](double t, const ModelState& s) {
        SimplexPoint x = read_strategy(kind, s);
        Vec p = eval_payoff(src, t, x);
        return vector_field(kind, s, p, params);
    };

    double t = 0.0;
    for (long step = 0;; ++step) {
        if (step % cfg.record_every == 0) {
            SimplexPoint x = read_strategy(kind, state);
            Vec p = eval_payoff(src, t, x);
            TangentVector xdot = strategy_derivative(kind, state, p, params);
            traj.times.push_back(t);
            traj.strategies.push_back(x);
            traj.states.push_back(state);
            traj.payoffs.push_back(p);
            traj.payoff_derivatives.push_back(eval_payoff_derivative(src, t, x, xdot));
            traj.strategy_derivatives.push_back(xdot);
        }
        if (step == steps) break;

        ModelState k1 = stage_field(t, state);
        ModelState k2 = stage_field(t + 0.5 * dt, state_step(state, 0.5 * dt, k1));
        ModelState k3 = stage_field(t + 0.5 * dt, state_step(state, 0.5 * dt, k2));
        ModelState k4 = stage_field(t + dt, state_step(state, dt, k3));

        state_axpy(state, dt / 6.0, k1);
        state_axpy(state, dt / 3.0, k2);
        state_axpy(state, dt / 3.0, k3);
        state_axpy(state, dt / 6.0, k4);
        t = (step + 1) * dt;

        if (!state.x.empty()) {
            try {
                state.x = safeguard(state.x).v;
            } catch (const IntegrationDivergedError&) {
                char buf[96];
                std::snprintf(buf, sizeof(buf), "integration diverged at t=%.6g", t);
                throw IntegrationDivergedError(buf, t);
            }
        }
    }
    return traj;
}

ConvergenceResult convergence_check(const Trajectory& traj, const SimplexPoint& target,
                                    double tail_fraction) {
    if (traj.samples() == 0) throw std::domain_error("convergence_check: empty trajectory");
    if (!(tail_fraction > 0.0) || tail_fraction > 1.0)
        throw std::domain_error("convergence_check: tail_fraction must be in (0, 1]");

    std::size_t count = traj.samples();
    std::size_t window = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                      std::ceil(tail_fraction * count)));
    double worst = 0.0;
    for (std::size_t i = count - window; i < count; ++i) {
        worst = std::max(worst, l2_dist(traj.strategies[i].v, target.v));
    }
    return {worst, worst < 1e-3};
}

namespace {

void put_value(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

}  // namespace

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    const int n = traj.n;
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",x_" << i;
    for (int i = 1; i <= n; ++i) out << ",p_" << i;
    for (int i = 1; i <= n; ++i) out << ",xdot_" << i;
    for (int i = 1; i <= n; ++i) out << ",pdot_" << i;
    out << "\n";

    for (std::size_t k = 0; k < traj.samples(); ++k) {
        put_value(out, traj.times[k]);
        for (int i = 0; i < n; ++i) { out << ","; put_value(out, traj.strategies[k].v[i]); }
        for (int i = 0; i < n; ++i) { out << ","; put_value(out, traj.payoffs[k][i]); }
        for (int i = 0; i < n; ++i) { out << ","; put_value(out, traj.strategy_derivatives[k].v[i]); }
        for (int i = 0; i < n; ++i) { out << ","; put_value(out, traj.payoff_derivatives[k][i]); }
        out << "\n";
    }
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    write_trajectory_csv(traj, file);
}

}  // namespace gamedyn
