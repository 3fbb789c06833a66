#include <doctest.h>

#include "sextic/bbf.hpp"

using namespace sextic;
using namespace sextic::bbf;

TEST_CASE("lattice invariants")
{
    const BBLattice l;
    const auto& g = l.gram();
    REQUIRE(g.size() == kRank);
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            CHECK(g[i][j] == g[j][i]);
    // even lattice apart from the <-2> summand, which is even too
    for (std::size_t i = 0; i < kRank; ++i)
        CHECK(g[i][i] % 2 == 0);
    CHECK(abs(l.determinant()) == 2);
    CHECK(l.signature() == std::pair<std::size_t, std::size_t>{3, 20});
}

TEST_CASE("Fujiki relation is the symmetrized square of q")
{
    const BBLattice l;
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        LatticeVector a = l.random_vector(rng), b = l.random_vector(rng), c = l.random_vector(rng),
                      d = l.random_vector(rng);
        CHECK(l.quad_intersection(a, b, c, d) == l.q(a, b) * l.q(c, d) + l.q(a, c) * l.q(b, d) + l.q(a, d) * l.q(b, c));
    }
    CHECK(l.quad_intersection(BBLattice::polarization(), BBLattice::polarization(), BBLattice::polarization(),
                              BBLattice::polarization()) == 12);
}

TEST_CASE("Euler characteristic of line bundles")
{
    for (long q = -10; q <= 20; q += 2) {
        mpq_class m = q;
        CHECK(chi_of_class(q) == m * m / 8 + 5 * m / 4 + 3);
    }
    CHECK(chi_of_class(-2) == 1);
    CHECK(chi_of_class(18) == 66);
    CHECK_THROWS(chi_of_class(3));
    const BBLattice l;
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        LatticeVector v = l.random_vector(rng);
        CHECK(chi_from_fujiki(l, v) == chi_of_class(l.q(v)));
    }
}

TEST_CASE("degree relations")
{
    const BBLattice l;
    const LatticeVector h = BBLattice::polarization();
    CHECK(verify_deg6(l, h).passed());
    CHECK(verify_deg6(l, h).checked == 23);
    CHECK(verify_deg4_independence(l, h).valid());
    CHECK(l.c2_pairing(h, h) == 60);
    CHECK(odd_section_count() == 66 - 56);
}
