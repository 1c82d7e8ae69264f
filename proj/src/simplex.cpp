#include "gamedyn/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace gamedyn {

bool on_simplex(const Vec& x, double tol) {
    for (double c : x) {
        if (!(c >= -tol)) return false;
    }
    return std::abs(sum(x) - 1.0) <= tol;
}

double simplex_distance(const Vec& y) {
    return l2_dist(y, project_simplex(y).v);
}

SimplexPoint project_simplex(const Vec& y) {
    const int n = static_cast<int>(y.size());
    if (n < 2) throw std::domain_error("project_simplex: dimension must be >= 2");
    if (!all_finite(y)) throw std::domain_error("project_simplex: non-finite input");

    // Sort descending, find the largest rho with u_rho - (cumsum - 1)/rho > 0,
    // then clip at the corresponding threshold.
    Vec u = y;
    std::sort(u.begin(), u.end(), std::greater<double>());

    double cumsum = 0.0;
    double theta = 0.0;
    int rho = 0;
    double rho_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        cumsum += u[j];
        if (u[j] - (cumsum - 1.0) / (j + 1) > 0.0) {
            rho = j + 1;
            rho_sum = cumsum;
        }
    }
    theta = (rho_sum - 1.0) / rho;

    SimplexPoint out;
    out.v.resize(n);
    for (int i = 0; i < n; ++i) out.v[i] = std::max(y[i] - theta, 0.0);
    return out;
}

TangentVector project_tangent_cone(const SimplexPoint& x, const Vec& p, double eps_active) {
    const int n = x.dim();
    if (static_cast<int>(p.size()) != n)
        throw std::domain_error("project_tangent_cone: dimension mismatch");
    if (!all_finite(p)) throw std::domain_error("project_tangent_cone: non-finite input");
    if (!(eps_active > 0.0)) throw std::domain_error("project_tangent_cone: eps_active must be > 0");
    if (!on_simplex(x.v, 1e-6)) throw std::domain_error("project_tangent_cone: x not on simplex");

    // Active-set iteration: start with the constrained set Z = {i : x_i <= eps},
    // pin S = {} to zero; repeatedly recompute the free-coordinate mean and move
    // every constrained coordinate whose residual would be negative into S.
    // Terminates in at most |Z| passes.
    std::vector<bool> constrained(n, false);
    for (int i = 0; i < n; ++i) constrained[i] = (x.v[i] <= eps_active);

    std::vector<bool> pinned(n, false);
    while (true) {
        double mean = 0.0;
        int free_count = 0;
        for (int i = 0; i < n; ++i) {
            if (!pinned[i]) {
                mean += p[i];
                ++free_count;
            }
        }
        mean /= free_count;

        bool moved = false;
        for (int i = 0; i < n; ++i) {
            if (constrained[i] && !pinned[i] && p[i] - mean < 0.0) {
                pinned[i] = true;
                moved = true;
            }
        }
        if (!moved) break;
    }

    double mean = 0.0;
    int free_count = 0;
    for (int i = 0; i < n; ++i) {
        if (!pinned[i]) {
            mean += p[i];
            ++free_count;
        }
    }
    mean /= free_count;

    TangentVector out;
    out.v.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (!pinned[i]) out.v[i] = p[i] - mean;
    }
    return out;
}

TangentVector project_tangent_space(const Vec& p) {
    if (!all_finite(p)) throw std::domain_error("project_tangent_space: non-finite input");
    const int n = static_cast<int>(p.size());
    double mean = sum(p) / n;
    TangentVector out;
    out.v.resize(n);
    for (int i = 0; i < n; ++i) out.v[i] = p[i] - mean;
    return out;
}

SimplexPoint softmax(const Vec& z) {
    if (!all_finite(z)) throw std::domain_error("softmax: non-finite input");
    const int n = static_cast<int>(z.size());
    double zmax = z[0];
    for (double v : z) zmax = std::max(zmax, v);

    SimplexPoint out;
    out.v.resize(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        out.v[i] = std::exp(z[i] - zmax);
        total += out.v[i];
    }
    for (int i = 0; i < n; ++i) out.v[i] /= total;
    return out;
}

SimplexPoint vertex(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("vertex: index out of range");
    SimplexPoint out;
    out.v.assign(n, 0.0);
    out.v[i - 1] = 1.0;
    return out;
}

SimplexPoint safeguard(const Vec& x) {
    if (!all_finite(x) || simplex_distance(x) > 1e-6)
        throw IntegrationDivergedError("safeguard: state left the simplex neighbourhood");

    SimplexPoint out;
    out.v.resize(x.size());
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.v[i] = std::max(x[i], 0.0);
        total += out.v[i];
    }
    for (double& c : out.v) c /= total;
    return out;
}

ActiveSet active_set(const SimplexPoint& x, double eps) {
    ActiveSet s;
    for (int i = 0; i < x.dim(); ++i) {
        if (x.v[i] <= eps) s.indices.push_back(i);
    }
    return s;
}

}  // namespace gamedyn
