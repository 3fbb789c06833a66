#include "sextic/bbf.hpp"

#include <stdexcept>

namespace sextic::bbf {

namespace {

// Cartan matrix of E8 (Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 on 4).
const std::array<std::array<long, 8>, 8> kE8 = {{
    {2, 0, -1, 0, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0},
    {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, 0, -1, 2},
}};

void check_length(const LatticeVector& a)
{
    if (a.size() != kRank)
        throw std::invalid_argument("lattice vectors have 23 coordinates, got " + std::to_string(a.size()));
}

std::vector<std::vector<mpq_class>> rational_gram(const std::vector<std::vector<long>>& g)
{
    std::vector<std::vector<mpq_class>> m(g.size(), std::vector<mpq_class>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            m[i][j] = g[i][j];
    return m;
}

} // namespace

BBLattice::BBLattice() : gram_(kRank, std::vector<long>(kRank, 0))
{
    for (std::size_t u = 0; u < 3; ++u) {
        gram_[2 * u][2 * u + 1] = 1;
        gram_[2 * u + 1][2 * u] = 1;
    }
    for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t off = 6 + 8 * b;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                gram_[off + i][off + j] = -kE8[i][j];
    }
    gram_[22][22] = -2;
}

long BBLattice::q(const LatticeVector& a, const LatticeVector& b) const
{
    check_length(a);
    check_length(b);
    long s = 0;
    for (std::size_t i = 0; i < kRank; ++i)
        if (a[i])
            for (std::size_t j = 0; j < kRank; ++j)
                s += a[i] * gram_[i][j] * b[j];
    return s;
}

long BBLattice::quad_intersection(const LatticeVector& a1, const LatticeVector& a2, const LatticeVector& a3,
                                  const LatticeVector& a4) const
{
    return q(a1, a2) * q(a3, a4) + q(a1, a3) * q(a2, a4) + q(a1, a4) * q(a2, a3);
}

mpq_class BBLattice::c2_pairing(const LatticeVector& a, const LatticeVector& b) const
{
    return kC2OverQDual * kQDualScale * q(a, b);
}

mpz_class BBLattice::determinant() const
{
    auto m = rational_gram(gram_);
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    if (det.get_den() != 1)
        throw std::logic_error("integer Gram matrix with non-integral determinant");
    return det.get_num();
}

// Congruence diagonalization; counts the signs of the diagonal.
std::pair<std::size_t, std::size_t> BBLattice::signature() const
{
    auto m = rational_gram(gram_);
    const std::size_t n = m.size();
    std::size_t pos = 0, neg = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c][c] == 0) {
            std::size_t p = c + 1;
            while (p < n && m[p][p] == 0)
                ++p;
            if (p < n) {
                std::swap(m[p], m[c]);
                for (auto& row : m)
                    std::swap(row[p], row[c]);
            } else {
                p = c + 1;
                while (p < n && m[c][p] == 0)
                    ++p;
                if (p == n)
                    continue; // zero row: null direction
                // e_c <- e_c + e_p makes the diagonal 2 m[c][p] + m[p][p] = 2 m[c][p].
                for (std::size_t k = 0; k < n; ++k)
                    m[c][k] += m[p][k];
                for (std::size_t k = 0; k < n; ++k)
                    m[k][c] += m[k][p];
            }
        }
        const mpq_class d = m[c][c];
        (d > 0 ? pos : neg) += 1;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / d;
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
            for (std::size_t k = c; k < n; ++k)
                m[k][r] = m[r][k];
        }
    }
    return {pos, neg};
}

LatticeVector BBLattice::basis(std::size_t i)
{
    if (i >= kRank)
        throw std::out_of_range("lattice basis index");
    LatticeVector v(kRank, 0);
    v[i] = 1;
    return v;
}

LatticeVector BBLattice::polarization()
{
    LatticeVector v(kRank, 0);
    v[0] = v[1] = 1;
    return v;
}

LatticeVector BBLattice::isotropic()
{
    return basis(0);
}

LatticeVector BBLattice::minus_two()
{
    return basis(22);
}

LatticeVector BBLattice::random_vector(Rng& rng, long bound) const
{
    LatticeVector v(kRank);
    for (auto& x : v)
        x = rng.range(-bound, bound);
    return v;
}

Deg6Report verify_deg6(const BBLattice& l, const LatticeVector& h)
{
    if (l.q(h) != 2)
        throw std::invalid_argument("verify_deg6 needs q(h, h) = 2");
    Deg6Report r;
    for (std::size_t i = 0; i < kRank; ++i) {
        const LatticeVector b = BBLattice::basis(i);
        ++r.checked;
        if (mpq_class(5 * l.quad_intersection(h, h, h, b)) != l.c2_pairing(h, b))
            ++r.failures;
    }
    return r;
}

Deg4Witness verify_deg4_independence(const BBLattice& l, const LatticeVector& h, const LatticeVector& alpha)
{
    if (l.q(h) != 2)
        throw std::invalid_argument("verify_deg4_independence needs q(h, h) = 2");
    Deg4Witness w;
    w.alpha = alpha;
    w.q_alpha = l.q(alpha);
    w.q_h_alpha = l.q(h, alpha);
    w.h2_form = l.quad_intersection(h, h, alpha, alpha);
    w.qdual_form = kQDualScale * l.q(alpha);
    w.h2_on_h = l.quad_intersection(h, h, h, h);
    w.qdual_on_h = kQDualScale * l.q(h);
    return w;
}

mpq_class chi_of_class(long q)
{
    if (q % 2 != 0)
        throw std::invalid_argument("the lattice is even: q must be even, got " + std::to_string(q));
    mpq_class x = q;
    return x * x / 8 + 5 * x / 4 + 3;
}

mpq_class chi_from_fujiki(const BBLattice& l, const LatticeVector& e)
{
    const mpq_class e4 = l.quad_intersection(e, e, e, e);
    return e4 / 24 + l.c2_pairing(e, e) / 24 + 3;
}

long odd_section_count()
{
    mpz_class cubics;
    mpz_bin_uiui(cubics.get_mpz_t(), 8, 3);
    mpq_class chi = chi_of_class(2 * 3 * 3);
    if (chi.get_den() != 1)
        throw std::logic_error("chi(O(3)) is not an integer");
    return mpz_class(chi.get_num() - cubics).get_si();
}

} // namespace sextic::bbf
