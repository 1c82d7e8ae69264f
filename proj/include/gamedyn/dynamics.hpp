#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamedyn/simplex.hpp"
#include "gamedyn/vec.hpp"

namespace gamedyn {

// The eleven continuous-time learning dynamic models.
enum class ModelKind {
    RD,         // replicator:              xdot_i = x_i (p_i - x.p)
    FTRL,       // entropy-regularised FTRL: zdot = p, x = softmax(z)
    DP,         // direct projection:       xdot = Pi_{TC(x)}(p)
    ShoFtrl,    // higher-order FTRL:       zdot = p - gamma (x - xi), xidot = lambda (x - xi)
    ShoDp,      // higher-order DP:         xdot = Pi_{TC(x)}(p - gamma (x - xi))
    BNN,        // Brown-von Neumann-Nash excess-payoff dynamics
    Smith,      // pairwise-comparison switch rates
    Logit,      // xdot = softmax(p) - x
    TP,         // target projection:       xdot = -x + Pi_simplex(x + p)
    ExRD,       // exponential replicator:  zdot = lambda (p - z), x = softmax(z)
    RDLatency,  // replicator fed a first-order-lagged payoff
};

const char* to_string(ModelKind k);
std::optional<ModelKind> model_from_string(std::string_view tag);
const std::vector<ModelKind>& all_models();

struct ModelParams {
    double lambda = 1.0;  // filter rate (ShoFtrl, ShoDp, ExRD, RDLatency)
    double gamma = 1.0;   // feedback gain (ShoFtrl, ShoDp)
};

void validate(const ModelParams& params);

// Composite state. Exactly the fields a ModelKind uses are non-empty:
//   x     strategy          (all but FTRL / ShoFtrl / ExRD, where it is read out)
//   z     score vector      (FTRL, ShoFtrl, ExRD)
//   xi    anticipatory aux  (ShoFtrl, ShoDp)
//   phat  filtered payoff   (RDLatency)
// The same shape doubles as the state time-derivative in vector_field().
struct ModelState {
    Vec x;
    Vec z;
    Vec xi;
    Vec phat;
};

bool uses_score_state(ModelKind k);   // z present
bool uses_aux_state(ModelKind k);     // xi present
bool uses_payoff_filter(ModelKind k); // phat present

// x0 must be strictly interior for the log/softmax-parameterised models
// (RD, FTRL, ShoFtrl, ExRD, RDLatency).
ModelState init_state(ModelKind k, int n, const ModelParams& params, const SimplexPoint& x0);

SimplexPoint read_strategy(ModelKind k, const ModelState& s);

// Exact right-hand side of the model at the given payoff.
ModelState vector_field(ModelKind k, const ModelState& s, const Vec& p, const ModelParams& params);

// d/dt of the strategy read-out; equal to the x component of vector_field for
// models carrying x, and the softmax chain rule (diag(x) - x x^T) zdot for the
// score-parameterised models.
TangentVector strategy_derivative(ModelKind k, const ModelState& s, const Vec& p,
                                  const ModelParams& params);

// True when every component of the vector field is within tol in sup norm.
bool is_rest_point(ModelKind k, const ModelState& s, const Vec& p, const ModelParams& params,
                   double tol);

}  // namespace gamedyn
