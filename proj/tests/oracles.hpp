#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sextic/matrix.hpp"

// Brute-force references used only by the tests.
namespace oracle {

inline int permutation_sign(std::vector<int> p)
{
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            inversions += p[i] > p[j];
    return inversions % 2 ? -1 : 1;
}

// Leibniz expansion.
inline sextic::Scalar leibniz_det(const sextic::Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    sextic::Scalar total = sextic::Scalar::zero(m.field());
    do {
        sextic::Scalar term(m.field(), static_cast<long>(permutation_sign(p)));
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline long binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace oracle
