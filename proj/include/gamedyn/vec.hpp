#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gamedyn {

// All strategy/payoff vectors in this library are small (n <= 16), so a
// plain std::vector<double> with a few free helpers is the working type.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double sum(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v;
    return s;
}

inline double linf_norm(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

inline double l2_norm(const Vec& a) {
    return std::sqrt(dot(a, a));
}

inline double l2_dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Vec& a, double c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// r += c * a
inline void axpy(Vec& r, double c, const Vec& a) {
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += c * a[i];
}

inline bool all_finite(const Vec& a) {
    for (double v : a) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace gamedyn
