#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gamedyn/vec.hpp"

namespace gamedyn {

// Boundary membership threshold for the tangent-cone computation: a
// coordinate with x_i <= kActiveEps is treated as sitting on the face x_i = 0.
inline constexpr double kActiveEps = 1e-9;

// Thrown when an integrated state leaves the feasible neighbourhood of the
// simplex. `time` is NaN when the failure happens outside an integration run.
class IntegrationDivergedError : public std::runtime_error {
  public:
    explicit IntegrationDivergedError(const std::string& what, double time = std::nan(""))
        : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

  private:
    double time_;
};

// Point on the probability simplex: coords >= 0, sum = 1 (within 1e-9).
struct SimplexPoint {
    Vec v;

    int dim() const { return static_cast<int>(v.size()); }
    double operator[](int i) const { return v[i]; }
};

// Element of the tangent space {y : sum y = 0} (within 1e-9).
struct TangentVector {
    Vec v;

    int dim() const { return static_cast<int>(v.size()); }
    double operator[](int i) const { return v[i]; }
};

// Indices of coordinates at the boundary (x_i <= eps).
struct ActiveSet {
    std::vector<int> indices;
};

bool on_simplex(const Vec& x, double tol = 1e-9);

// Euclidean distance from y to the simplex.
double simplex_distance(const Vec& y);

// Euclidean projection onto the simplex via sort-then-threshold
// (Held/Wolfe/Crowder; see also Duchi et al. 2008). Exact in O(n log n).
SimplexPoint project_simplex(const Vec& y);

// Projection of p onto the tangent cone of the simplex at x:
//   { v : sum v = 0,  v_i >= 0 for every i with x_i <= eps_active }.
// Solved by the finite active-set iteration described below the declaration
// in the implementation file.
TangentVector project_tangent_cone(const SimplexPoint& x, const Vec& p,
                                   double eps_active = kActiveEps);

// Mean removal: p minus its coordinate average, the projection onto {sum=0}.
TangentVector project_tangent_space(const Vec& p);

// Max-subtracted softmax; strictly interior output for any finite input.
SimplexPoint softmax(const Vec& z);

// i-th vertex e_i, 1-based, 1 <= i <= n.
SimplexPoint vertex(int i, int n);

// Clip tiny negatives and renormalise. Accepts inputs within 1e-6 of the
// simplex; anything farther away throws IntegrationDivergedError.
SimplexPoint safeguard(const Vec& x);

ActiveSet active_set(const SimplexPoint& x, double eps = kActiveEps);

}  // namespace gamedyn
