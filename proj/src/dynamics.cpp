#include "gamedyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace gamedyn {

const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::RD: return "rd";
        case ModelKind::FTRL: return "ftrl";
        case ModelKind::DP: return "dp";
        case ModelKind::ShoFtrl: return "sho-ftrl";
        case ModelKind::ShoDp: return "sho-dp";
        case ModelKind::BNN: return "bnn";
        case ModelKind::Smith: return "smith";
        case ModelKind::Logit: return "logit";
        case ModelKind::TP: return "tp";
        case ModelKind::ExRD: return "exrd";
        case ModelKind::RDLatency: return "rd-latency";
    }
    return "?";
}

std::optional<ModelKind> model_from_string(std::string_view tag) {
    for (ModelKind k : all_models()) {
        if (tag == to_string(k)) return k;
    }
    return std::nullopt;
}

const std::vector<ModelKind>& all_models() {
    static const std::vector<ModelKind> kAll = {
        ModelKind::RD,    ModelKind::FTRL,  ModelKind::DP,   ModelKind::ShoFtrl,
        ModelKind::ShoDp, ModelKind::BNN,   ModelKind::Smith, ModelKind::Logit,
        ModelKind::TP,    ModelKind::ExRD,  ModelKind::RDLatency,
    };
    return kAll;
}

void validate(const ModelParams& params) {
    if (!(params.lambda > 0.0)) throw std::domain_error("ModelParams: lambda must be > 0");
    if (!(params.gamma > 0.0)) throw std::domain_error("ModelParams: gamma must be > 0");
}

bool uses_score_state(ModelKind k) {
    return k == ModelKind::FTRL || k == ModelKind::ShoFtrl || k == ModelKind::ExRD;
}

bool uses_aux_state(ModelKind k) {
    return k == ModelKind::ShoFtrl || k == ModelKind::ShoDp;
}

bool uses_payoff_filter(ModelKind k) {
    return k == ModelKind::RDLatency;
}

namespace {

bool needs_interior_start(ModelKind k) {
    switch (k) {
        case ModelKind::RD:
        case ModelKind::FTRL:
        case ModelKind::ShoFtrl:
        case ModelKind::ExRD:
        case ModelKind::RDLatency:
            return true;
        default:
            return false;
    }
}

// Replicator right-hand side under payoff q: x_i (q_i - x.q).
Vec replicator_field(const Vec& x, const Vec& q) {
    double avg = dot(x, q);
    Vec d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] * (q[i] - avg);
    return d;
}

}  // namespace

ModelState init_state(ModelKind k, int n, const ModelParams& params, const SimplexPoint& x0) {
    validate(params);
    if (x0.dim() != n) throw std::domain_error("init_state: x0 dimension mismatch");
    if (!on_simplex(x0.v)) throw std::domain_error("init_state: x0 not on simplex");
    if (needs_interior_start(k)) {
        for (double c : x0.v) {
            if (!(c > 0.0))
                throw std::domain_error("init_state: boundary x0 for a log-parameterised model");
        }
    }

    ModelState s;
    if (uses_score_state(k)) {
        // z = log(x0) makes the softmax read-out equal x0.
        s.z.resize(n);
        for (int i = 0; i < n; ++i) s.z[i] = std::log(x0.v[i]);
    } else {
        s.x = x0.v;
    }
    if (uses_aux_state(k)) s.xi = x0.v;   // starts on the reduced dynamics
    if (uses_payoff_filter(k)) s.phat.assign(n, 0.0);
    return s;
}

SimplexPoint read_strategy(ModelKind k, const ModelState& s) {
    if (uses_score_state(k)) return softmax(s.z);
    SimplexPoint x;
    x.v = s.x;
    return x;
}

ModelState vector_field(ModelKind k, const ModelState& s, const Vec& p, const ModelParams& params) {
    if (!all_finite(p)) throw std::domain_error("vector_field: non-finite payoff");
    const int n = static_cast<int>(p.size());
    ModelState d;

    switch (k) {
        case ModelKind::RD: {
            d.x = replicator_field(s.x, p);
            break;
        }
        case ModelKind::FTRL: {
            d.z = p;
            break;
        }
        case ModelKind::DP: {
            SimplexPoint x;
            x.v = s.x;
            d.x = project_tangent_cone(x, p).v;
            break;
        }
        case ModelKind::ShoFtrl: {
            SimplexPoint x = softmax(s.z);
            d.z.resize(n);
            d.xi.resize(n);
            for (int i = 0; i < n; ++i) {
                double gap = x.v[i] - s.xi[i];
                d.z[i] = p[i] - params.gamma * gap;
                d.xi[i] = params.lambda * gap;
            }
            break;
        }
        case ModelKind::ShoDp: {
            Vec effective(n);
            d.xi.resize(n);
            for (int i = 0; i < n; ++i) {
                double gap = s.x[i] - s.xi[i];
                effective[i] = p[i] - params.gamma * gap;
                d.xi[i] = params.lambda * gap;
            }
            SimplexPoint x;
            x.v = s.x;
            d.x = project_tangent_cone(x, effective).v;
            break;
        }
        case ModelKind::BNN: {
            double avg = dot(s.x, p);
            double excess_total = 0.0;
            Vec excess(n);
            for (int i = 0; i < n; ++i) {
                excess[i] = std::max(p[i] - avg, 0.0);
                excess_total += excess[i];
            }
            d.x.resize(n);
            for (int i = 0; i < n; ++i) d.x[i] = excess[i] - s.x[i] * excess_total;
            break;
        }
        case ModelKind::Smith: {
            d.x.resize(n);
            for (int i = 0; i < n; ++i) {
                double in_rate = 0.0;
                double out_rate = 0.0;
                for (int j = 0; j < n; ++j) {
                    in_rate += s.x[j] * std::max(p[i] - p[j], 0.0);
                    out_rate += std::max(p[j] - p[i], 0.0);
                }
                d.x[i] = in_rate - s.x[i] * out_rate;
            }
            break;
        }
        case ModelKind::Logit: {
            SimplexPoint target = softmax(p);
            d.x = sub(target.v, s.x);
            break;
        }
        case ModelKind::TP: {
            SimplexPoint target = project_simplex(add(s.x, p));
            d.x = sub(target.v, s.x);
            break;
        }
        case ModelKind::ExRD: {
            d.z.resize(n);
            for (int i = 0; i < n; ++i) d.z[i] = params.lambda * (p[i] - s.z[i]);
            break;
        }
        case ModelKind::RDLatency: {
            d.x = replicator_field(s.x, s.phat);
            d.phat.resize(n);
            for (int i = 0; i < n; ++i) d.phat[i] = params.lambda * (p[i] - s.phat[i]);
            break;
        }
    }
    return d;
}

TangentVector strategy_derivative(ModelKind k, const ModelState& s, const Vec& p,
                                  const ModelParams& params) {
    ModelState d = vector_field(k, s, p, params);
    TangentVector out;
    if (!uses_score_state(k)) {
        out.v = d.x;
        return out;
    }
    // Chain rule through the softmax read-out: xdot = (diag(x) - x x^T) zdot.
    SimplexPoint x = softmax(s.z);
    const int n = x.dim();
    double avg = dot(x.v, d.z);
    out.v.resize(n);
    for (int i = 0; i < n; ++i) out.v[i] = x.v[i] * (d.z[i] - avg);
    return out;
}

bool is_rest_point(ModelKind k, const ModelState& s, const Vec& p, const ModelParams& params,
                   double tol) {
    ModelState d = vector_field(k, s, p, params);
    double worst = 0.0;
    worst = std::max(worst, linf_norm(d.x));
    worst = std::max(worst, linf_norm(d.z));
    worst = std::max(worst, linf_norm(d.xi));
    worst = std::max(worst, linf_norm(d.phat));
    return worst <= tol;
}

}  // namespace gamedyn
