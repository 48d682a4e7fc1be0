#pragma once
#include <cstdint>
#include <cmath>

#include "tca/mathx.hpp"

namespace tca::rng {

// splitmix64: statistically solid, trivially seedable, stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent substream derived from (seed, stream_id); results are
// schedule-independent so entities can be generated in any order.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t s = seed;
        const std::uint64_t a = splitmix64(s);
        s = stream_id ^ 0x6a09e667f3bcc909ULL;
        state_ = a ^ splitmix64(s);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive bounds.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Inverse-CDF normal: one uniform per draw, fully deterministic.
    double normal() {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return mathx::norm_ppf(u);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    double lognormal(double mu_log, double sigma_log) { return std::exp(normal(mu_log, sigma_log)); }

private:
    std::uint64_t state_;
};

} // namespace tca::rng
