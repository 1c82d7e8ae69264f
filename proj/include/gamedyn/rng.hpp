#pragma once

#include <cstdint>

#include "gamedyn/vec.hpp"

namespace gamedyn {

// Small deterministic generator (splitmix64 core). Experiment outputs must
// be byte-identical across reruns, so we avoid the implementation-defined
// std:: distributions and derive doubles from the raw stream directly.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi] inclusive
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Uniform point on the simplex (flat Dirichlet via exponential spacings).
    Vec dirichlet(int n) {
        Vec x(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            // -log(U) with U in (0,1]
            double u = 1.0 - uniform();
            x[i] = -std::log(u);
            total += x[i];
        }
        for (int i = 0; i < n; ++i) x[i] /= total;
        return x;
    }

    // Random unit vector in the tangent space {sum = 0} of dimension n.
    Vec tangent_direction(int n) {
        Vec d(n);
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            d[i] = gaussian();
            mean += d[i];
        }
        mean /= n;
        for (int i = 0; i < n; ++i) d[i] -= mean;
        double nrm = l2_norm(d);
        if (nrm < 1e-12) return tangent_direction(n);
        for (int i = 0; i < n; ++i) d[i] /= nrm;
        return d;
    }

    double gaussian() {
        // Box-Muller; one value per call keeps the stream simple.
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

  private:
    std::uint64_t state_;
};

// Stable per-task sub-seed so parallel experiment workers stay deterministic.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    Rng r(base ^ (0x51d36c9e21f4ab31ULL + stream * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
}

}  // namespace gamedyn
