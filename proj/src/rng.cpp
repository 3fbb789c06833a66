#include "sextic/rng.hpp"

namespace sextic {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Scalar Rng::scalar(const Field& f, long bound)
{
    if (f.is_prime())
        return Scalar(f, static_cast<long>(below(f.characteristic())));
    return Scalar(f, range(-bound, bound));
}

Scalar Rng::nonzero_scalar(const Field& f, long bound)
{
    for (;;) {
        Scalar s = scalar(f, bound);
        if (!s.is_zero())
            return s;
    }
}

} // namespace sextic
