#pragma once

#include <cstdint>
#include <random>

#include "sextic/scalar.hpp"

namespace sextic {

std::uint64_t splitmix64(std::uint64_t x);

// Seeded generator; every draw is a fixed function of (seed, stream, call index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Independent generator for sub-task `stream`; used to split trials.
    static Rng derive(std::uint64_t seed, std::uint64_t stream)
    {
        return Rng(splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL)));
    }

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    // Uniform in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    // Uniform in F_p, or a small integer in [-bound, bound] over Q.
    Scalar scalar(const Field& f, long bound = 9);
    Scalar nonzero_scalar(const Field& f, long bound = 9);

private:
    std::mt19937_64 engine_;
};

} // namespace sextic
