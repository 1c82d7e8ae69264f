#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gamedyn/simplex.hpp"
#include "gamedyn/vec.hpp"

namespace gamedyn {

// One sinusoid term amplitude * sin(frequency * t + phase).
struct SinTerm {
    double amplitude;
    double frequency;
    double phase;
};

// Analytic time signal p(t) with closed-form derivative: per-coordinate sum
// of sinusoids plus a constant offset. A pure constant signal has no terms.
struct PayoffSignal {
    Vec offset;
    std::vector<std::vector<SinTerm>> terms;

    int dim() const { return static_cast<int>(offset.size()); }
    Vec value(double t) const;
    Vec derivative(double t) const;
};

// Linear population game F(x) = A x. `known_ne` optionally stores a Nash
// equilibrium; it is validated against the vertex inequalities on creation.
struct MatrixGame {
    int n = 0;
    Vec a;  // row-major n*n
    std::optional<Vec> known_ne;

    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    Vec apply(const Vec& x) const;
};

// Payoff feed for a learning run: an open-loop time signal, or a population
// game closing the loop through the current strategy.
using PayoffSource = std::variant<PayoffSignal, MatrixGame>;

int source_dim(const PayoffSource& src);

Vec eval_payoff(const PayoffSource& src, double t, const SimplexPoint& x);

// Time derivative of the payoff along the trajectory: closed-form signal
// derivative, or A*xdot in game mode.
Vec eval_payoff_derivative(const PayoffSource& src, double t, const SimplexPoint& x,
                           const TangentVector& xdot);

enum class GameClass { StrictlyContractive, Contractive, NotContractive };

const char* to_string(GameClass c);

struct ContractivityReport {
    GameClass game_class;
    // Largest eigenvalue of A + A^T restricted to the tangent space {sum=0}.
    double min_pairing;
    // Largest of d^T (A + A^T) d over the sampled unit tangent directions;
    // cross-check only, never exceeds min_pairing by more than roundoff.
    double sampled_max;
};

ContractivityReport contractivity_report(const MatrixGame& g, int samples, std::uint64_t rng_seed);

// Validates dimensions and, when `ne` is given, the Nash vertex inequalities.
MatrixGame make_matrix_game(int n, Vec row_major, std::optional<Vec> ne = std::nullopt);

PayoffSignal example1_signal();                 // [sin t, 0.5]
PayoffSignal example2_signal();                 // [sin t, -sin t]
PayoffSignal constant_signal(Vec c);
// Sum of at most `terms` sinusoids per coordinate, amplitudes in [-1, 1],
// frequencies in [0.1, 3], phases uniform in [0, 2*pi), zero offset.
PayoffSignal random_smooth_signal(int n, int terms, std::uint64_t rng_seed);

MatrixGame standard_rps();  // zero-sum rock-paper-scissors, uniform NE
MatrixGame good_rps();      // win 2 / lose 1 variant, strictly contractive

}  // namespace gamedyn
