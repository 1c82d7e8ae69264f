#include "gamedyn/payoffs.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "gamedyn/rng.hpp"

namespace gamedyn {

Vec PayoffSignal::value(double t) const {
    Vec p = offset;
    for (int i = 0; i < dim(); ++i) {
        for (const SinTerm& s : terms[i]) {
            p[i] += s.amplitude * std::sin(s.frequency * t + s.phase);
        }
    }
    return p;
}

Vec PayoffSignal::derivative(double t) const {
    Vec d(dim(), 0.0);
    for (int i = 0; i < dim(); ++i) {
        for (const SinTerm& s : terms[i]) {
            d[i] += s.amplitude * s.frequency * std::cos(s.frequency * t + s.phase);
        }
    }
    return d;
}

Vec MatrixGame::apply(const Vec& x) const {
    Vec p(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += at(i, j) * x[j];
        p[i] = acc;
    }
    return p;
}

int source_dim(const PayoffSource& src) {
    if (const auto* sig = std::get_if<PayoffSignal>(&src)) return sig->dim();
    return std::get<MatrixGame>(src).n;
}

Vec eval_payoff(const PayoffSource& src, double t, const SimplexPoint& x) {
    if (const auto* sig = std::get_if<PayoffSignal>(&src)) return sig->value(t);
    return std::get<MatrixGame>(src).apply(x.v);
}

Vec eval_payoff_derivative(const PayoffSource& src, double t, const SimplexPoint& x,
                           const TangentVector& xdot) {
    (void)x;
    if (const auto* sig = std::get_if<PayoffSignal>(&src)) return sig->derivative(t);
    return std::get<MatrixGame>(src).apply(xdot.v);
}

const char* to_string(GameClass c) {
    switch (c) {
        case GameClass::StrictlyContractive: return "strictly-contractive";
        case GameClass::Contractive: return "contractive";
        case GameClass::NotContractive: return "not-contractive";
    }
    return "?";
}

ContractivityReport contractivity_report(const MatrixGame& g, int samples, std::uint64_t rng_seed) {
    if (samples < 1) throw std::domain_error("contractivity_report: samples must be >= 1");
    const int n = g.n;

    // S = A + A^T carries the game's pairing: (x-y)^T (Ax - Ay) = d^T S d / 2.
    Eigen::MatrixXd s(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) s(i, j) = g.at(i, j) + g.at(j, i);
    }

    // Restrict S to the tangent space: deflate the all-ones direction with an
    // orthonormal basis Q of {sum = 0} and take the spectrum of Q^T S Q.
    Eigen::MatrixXd basis(n, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        // k-th Helmert-style direction: (1,...,1,-(k+1),0,...,0)/norm
        Eigen::VectorXd col = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= k; ++i) col(i) = 1.0;
        col(k + 1) = -(k + 1);
        basis.col(k) = col / col.norm();
    }
    Eigen::MatrixXd restricted = basis.transpose() * s * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted);
    double max_eig = eig.eigenvalues().maxCoeff();

    Rng rng(rng_seed);
    double sampled_max = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        Vec d = rng.tangent_direction(n);
        // d^T (A + A^T) d = 2 d^T A d
        double q = 2.0 * dot(d, g.apply(d));
        sampled_max = std::max(sampled_max, q);
    }

    ContractivityReport rep;
    rep.min_pairing = max_eig;
    rep.sampled_max = sampled_max;
    if (max_eig < -1e-9) {
        rep.game_class = GameClass::StrictlyContractive;
    } else if (max_eig <= 1e-9) {
        rep.game_class = GameClass::Contractive;
    } else {
        rep.game_class = GameClass::NotContractive;
    }
    return rep;
}

MatrixGame make_matrix_game(int n, Vec row_major, std::optional<Vec> ne) {
    if (n < 2) throw std::domain_error("make_matrix_game: n must be >= 2");
    if (static_cast<int>(row_major.size()) != n * n)
        throw std::domain_error("make_matrix_game: matrix must have n*n entries");
    if (!all_finite(row_major)) throw std::domain_error("make_matrix_game: non-finite entries");

    MatrixGame g;
    g.n = n;
    g.a = std::move(row_major);

    if (ne) {
        if (!on_simplex(*ne)) throw std::domain_error("make_matrix_game: known_ne not on simplex");
        Vec fx = g.apply(*ne);
        double value = dot(*ne, fx);
        for (int i = 0; i < n; ++i) {
            if (fx[i] > value + 1e-9)
                throw std::domain_error("make_matrix_game: known_ne fails the Nash inequality");
        }
        g.known_ne = std::move(*ne);
    }
    return g;
}

PayoffSignal example1_signal() {
    PayoffSignal s;
    s.offset = {0.0, 0.5};
    s.terms = {{{1.0, 1.0, 0.0}}, {}};
    return s;
}

PayoffSignal example2_signal() {
    PayoffSignal s;
    s.offset = {0.0, 0.0};
    s.terms = {{{1.0, 1.0, 0.0}}, {{-1.0, 1.0, 0.0}}};
    return s;
}

PayoffSignal constant_signal(Vec c) {
    PayoffSignal s;
    s.terms.resize(c.size());
    s.offset = std::move(c);
    return s;
}

PayoffSignal random_smooth_signal(int n, int terms, std::uint64_t rng_seed) {
    if (n < 2) throw std::domain_error("random_smooth_signal: n must be >= 2");
    if (terms < 1) throw std::domain_error("random_smooth_signal: terms must be >= 1");

    Rng rng(rng_seed);
    PayoffSignal s;
    s.offset.assign(n, 0.0);
    s.terms.resize(n);
    for (int i = 0; i < n; ++i) {
        int count = rng.uniform_int(1, terms);
        for (int k = 0; k < count; ++k) {
            SinTerm term;
            term.amplitude = rng.uniform(-1.0, 1.0);
            term.frequency = rng.uniform(0.1, 3.0);
            term.phase = rng.uniform(0.0, 6.283185307179586);
            s.terms[i].push_back(term);
        }
    }
    return s;
}

MatrixGame standard_rps() {
    Vec u(3, 1.0 / 3.0);
    return make_matrix_game(3,
                            {0.0, -1.0, 1.0,   //
                             1.0, 0.0, -1.0,   //
                             -1.0, 1.0, 0.0},
                            u);
}

MatrixGame good_rps() {
    Vec u(3, 1.0 / 3.0);
    return make_matrix_game(3,
                            {0.0, -1.0, 2.0,   //
                             2.0, 0.0, -1.0,   //
                             -1.0, 2.0, 0.0},
                            u);
}

}  // namespace gamedyn
