#include "gamedyn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gamedyn {

namespace {
constexpr double kLogClamp = 1e-12;
}

Vec cumulative_trapezoid(const std::vector<double>& t, const Vec& y) {
    Vec out(y.size(), 0.0);
    for (std::size_t k = 1; k < y.size(); ++k) {
        out[k] = out[k - 1] + 0.5 * (y[k] + y[k - 1]) * (t[k] - t[k - 1]);
    }
    return out;
}

Vec regret_series(const Trajectory& traj, const SimplexPoint& anchor) {
    if (traj.samples() == 0) throw std::domain_error("regret_series: empty trajectory");
    if (!on_simplex(anchor.v)) throw std::domain_error("regret_series: anchor off simplex");

    Vec integrand(traj.samples());
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        integrand[k] = dot(traj.payoffs[k], anchor.v) - dot(traj.payoffs[k], traj.strategies[k].v);
    }
    return cumulative_trapezoid(traj.times, integrand);
}

Vec average_reward(const Trajectory& traj) {
    if (traj.samples() == 0) throw std::domain_error("average_reward: empty trajectory");
    Vec reward(traj.samples());
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        reward[k] = dot(traj.payoffs[k], traj.strategies[k].v);
    }
    Vec cumulative = cumulative_trapezoid(traj.times, reward);
    Vec avg(traj.samples());
    avg[0] = reward[0];
    for (std::size_t k = 1; k < traj.samples(); ++k) avg[k] = cumulative[k] / traj.times[k];
    return avg;
}

std::optional<double> storage_bound(ModelKind kind, const SimplexPoint& x0) {
    const int n = x0.dim();
    auto worst_vertex = [&](auto&& per_vertex) {
        double worst = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) worst = std::max(worst, per_vertex(i));
        return worst;
    };
    auto half_sq = [&](int i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            double d = x0.v[j] - (i == j ? 1.0 : 0.0);
            s += d * d;
        }
        return 0.5 * s;
    };
    auto neg_log = [&](int i) { return -std::log(std::max(x0.v[i], kLogClamp)); };

    switch (kind) {
        case ModelKind::RD:
        case ModelKind::FTRL:
            return worst_vertex(neg_log);
        case ModelKind::DP:
            return worst_vertex(half_sq);
        case ModelKind::ShoFtrl:
            return worst_vertex([&](int i) { return neg_log(i) + half_sq(i); });
        case ModelKind::ShoDp:
            return worst_vertex([&](int i) { return 2.0 * half_sq(i); });
        default:
            return std::nullopt;
    }
}

RegretReport regret_report(const Trajectory& traj, ModelKind kind, const ModelParams& params,
                           const SimplexPoint& x0, double slack) {
    (void)params;
    RegretReport rep;
    rep.sup_regret = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= traj.n; ++i) {
        Vec curve = regret_series(traj, vertex(i, traj.n));
        for (double v : curve) rep.sup_regret = std::max(rep.sup_regret, v);
        rep.vertex_regret_curves.push_back(std::move(curve));
    }
    rep.storage_bound = storage_bound(kind, x0);
    rep.bounded_verdict =
        rep.storage_bound.has_value() && rep.sup_regret <= *rep.storage_bound + slack;
    return rep;
}

PassivityReport passivity_report(const Trajectory& traj,
                                 const std::optional<EquilibriumPair>& equilibrium) {
    if (traj.samples() == 0) throw std::domain_error("passivity_report: empty trajectory");
    PassivityReport rep;

    // <p, x - e_i>_t is the negated vertex regret.
    for (int i = 1; i <= traj.n; ++i) {
        Vec curve = regret_series(traj, vertex(i, traj.n));
        for (double& v : curve) v = -v;
        rep.plain_minima.push_back(*std::min_element(curve.begin(), curve.end()));
        rep.plain_curves.push_back(std::move(curve));
    }

    Vec delta_integrand(traj.samples());
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        delta_integrand[k] = dot(traj.strategy_derivatives[k].v, traj.payoff_derivatives[k]);
    }
    rep.delta_curve = cumulative_trapezoid(traj.times, delta_integrand);
    rep.delta_min = *std::min_element(rep.delta_curve.begin(), rep.delta_curve.end());

    if (equilibrium) {
        if (!on_simplex(equilibrium->x_star.v))
            throw std::domain_error("passivity_report: x* off simplex");
        Vec integrand(traj.samples());
        for (std::size_t k = 0; k < traj.samples(); ++k) {
            double acc = 0.0;
            for (int i = 0; i < traj.n; ++i) {
                acc += (traj.payoffs[k][i] - equilibrium->p_star[i]) *
                       (traj.strategies[k].v[i] - equilibrium->x_star.v[i]);
            }
            integrand[k] = acc;
        }
        rep.ei_curve = cumulative_trapezoid(traj.times, integrand);
        rep.ei_min = *std::min_element(rep.ei_curve->begin(), rep.ei_curve->end());
        rep.equilibrium = equilibrium;
    }
    return rep;
}

double storage_eval(const StorageFn& fn, const ModelState& state) {
    double v = 0.0;
    const Vec& anchor = fn.anchor;
    switch (fn.kind) {
        case StorageKind::KlToAnchor: {
            const Vec& x = state.x;
            for (std::size_t i = 0; i < anchor.size(); ++i) {
                if (anchor[i] > 0.0) {
                    v += anchor[i] * std::log(anchor[i] / std::max(x[i], kLogClamp));
                }
            }
            break;
        }
        case StorageKind::HalfSqDist: {
            v = 0.5 * l2_dist(state.x, anchor) * l2_dist(state.x, anchor);
            break;
        }
        case StorageKind::FtrlFenchel: {
            const Vec& z = state.z;
            double zmax = z[0];
            for (double c : z) zmax = std::max(zmax, c);
            double lse = 0.0;
            for (double c : z) lse += std::exp(c - zmax);
            lse = zmax + std::log(lse);
            double linear = dot(z, anchor);
            double h = 0.0;  // h(y) = sum y log y
            for (double c : anchor) {
                if (c > 0.0) h += c * std::log(c);
            }
            v = lse - (linear - h);
            break;
        }
    }
    if (fn.aux_anchor) {
        double d = l2_dist(state.xi, *fn.aux_anchor);
        v += 0.5 * d * d;
    }
    return v;
}

StorageFn matching_storage(ModelKind kind, const Vec& anchor) {
    StorageFn fn;
    fn.anchor = anchor;
    switch (kind) {
        case ModelKind::RD:
            fn.kind = StorageKind::KlToAnchor;
            break;
        case ModelKind::FTRL:
            fn.kind = StorageKind::FtrlFenchel;
            break;
        case ModelKind::DP:
            fn.kind = StorageKind::HalfSqDist;
            break;
        case ModelKind::ShoFtrl:
            fn.kind = StorageKind::FtrlFenchel;
            fn.aux_anchor = anchor;
            break;
        case ModelKind::ShoDp:
            fn.kind = StorageKind::HalfSqDist;
            fn.aux_anchor = anchor;
            break;
        default:
            throw std::domain_error("matching_storage: model has no storage certificate");
    }
    return fn;
}

double dissipation_check(const Trajectory& traj, ModelKind kind, const ModelParams& params,
                         const StorageFn& fn) {
    (void)kind;
    (void)params;
    if (traj.samples() == 0) throw std::domain_error("dissipation_check: empty trajectory");

    Vec supplied(traj.samples());
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        supplied[k] =
            dot(traj.payoffs[k], traj.strategies[k].v) - dot(traj.payoffs[k], fn.anchor);
    }
    Vec supply_curve = cumulative_trapezoid(traj.times, supplied);

    double v0 = storage_eval(fn, traj.states[0]);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        double violation = storage_eval(fn, traj.states[k]) - v0 - supply_curve[k];
        worst = std::max(worst, violation);
    }
    return worst;
}

Vec qt_integrand(const Trajectory& traj) {
    Vec out(traj.samples());
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        const ModelState& s = traj.states[k];
        if (s.phat.empty())
            throw std::domain_error("qt_integrand: trajectory has no filtered-payoff state");
        const Vec& x = traj.strategies[k].v;
        double mean = dot(x, s.phat);
        double quad = 0.0;
        for (int i = 0; i < traj.n; ++i) quad += x[i] * s.phat[i] * s.phat[i];
        out[k] = quad - mean * mean;
    }
    return out;
}

double least_squares_slope(const std::vector<double>& t, const Vec& y, std::size_t from) {
    if (from + 2 > y.size()) throw std::domain_error("least_squares_slope: too few samples");
    double n = 0.0, st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t k = from; k < y.size(); ++k) {
        n += 1.0;
        st += t[k];
        sy += y[k];
        stt += t[k] * t[k];
        sty += t[k] * y[k];
    }
    return (n * sty - st * sy) / (n * stt - st * st);
}

bool running_min_stabilizes(const Vec& y, double tol) {
    if (y.size() < 8) return true;
    std::size_t q = (3 * y.size()) / 4;
    double min_before = y[0];
    for (std::size_t k = 0; k < q; ++k) min_before = std::min(min_before, y[k]);
    double min_after = min_before;
    for (std::size_t k = q; k < y.size(); ++k) min_after = std::min(min_after, y[k]);
    return min_after >= min_before - tol;
}

Trajectory policy_trajectory(const PayoffSignal& signal, const PolicyFn& policy,
                             const IntegratorConfig& cfg) {
    validate(cfg);
    const int n = signal.dim();

    Trajectory traj;
    traj.n = n;
    const long steps = std::lround(cfg.horizon / cfg.dt);
    for (long step = 0; step <= steps; step += cfg.record_every) {
        double t = step * cfg.dt;
        SimplexPoint x = policy(t);
        traj.times.push_back(t);
        traj.strategies.push_back(x);
        ModelState s;
        s.x = x.v;
        traj.states.push_back(std::move(s));
        traj.payoffs.push_back(signal.value(t));
        traj.payoff_derivatives.push_back(signal.derivative(t));
        // Policies are piecewise constant; their strategy derivative is 0 a.e.
        TangentVector zero;
        zero.v.assign(n, 0.0);
        traj.strategy_derivatives.push_back(std::move(zero));
    }
    return traj;
}

PolicyFn example1_opt_policy() {
    return [](double t) {
        return std::sin(t) >= 0.5 ? vertex(1, 2) : vertex(2, 2);
    };
}

PolicyFn fixed_policy(SimplexPoint x) {
    return [x](double) { return x; };
}

void write_series_csv(const std::vector<double>& t, const std::vector<NamedSeries>& columns,
                      const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "t";
    for (const NamedSeries& c : columns) out << "," << c.name;
    out << "\n";
    char buf[40];
    for (std::size_t k = 0; k < t.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", t[k]);
        out << buf;
        for (const NamedSeries& c : columns) {
            std::snprintf(buf, sizeof(buf), "%.17g", (*c.values)[k]);
            out << "," << buf;
        }
        out << "\n";
    }
}

}  // namespace gamedyn
