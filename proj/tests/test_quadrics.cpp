#include <doctest.h>
#include <gmpxx.h>

#include "oracles.hpp"
#include "sextic/quadrics.hpp"

using namespace sextic;
using namespace sextic::quadrics;

namespace {

// Closed product formula for the degree of symmetric n x n forms of rank <= r.
mpq_class symmetric_degree_formula(long n, long r)
{
    mpq_class d = 1;
    for (long a = 0; a < n - r; ++a)
        d *= mpq_class(oracle::binomial(n + a, n - r - a), oracle::binomial(2 * a + 1, a));
    d.canonicalize();
    return d;
}

} // namespace

TEST_CASE("quartic surface is the determinant of the member")
{
    Rng rng(1);
    const Field f = Field::prime(10007);
    WebOfQuadrics web = WebOfQuadrics::random(f, rng);
    Polynomial s = quartic_surface(web);
    CHECK(s.total_degree() == 4);
    CHECK(s.is_homogeneous());
    for (int t = 0; t < 10; ++t) {
        Vector x{rng.scalar(f), rng.scalar(f), rng.scalar(f), rng.scalar(f)};
        CHECK(s.evaluate(x) == oracle::leibniz_det(web.member(x)));
        Vector g = jacobi_gradient(web, x);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(g[i] == s.derivative(i).evaluate(x));
    }
}

TEST_CASE("degrees of symmetric determinantal loci")
{
    CHECK(harris_tu_degree(4, 2) == 10);
    CHECK(harris_tu_degree(4, 3) == 4);
    CHECK(harris_tu_degree(3, 1) == 4);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned r = 0; r < n; ++r)
            CHECK(mpq_class(harris_tu_degree(n, r)) == symmetric_degree_formula(n, r));
}

TEST_CASE("rank one conics form the Veronese surface of degree 4")
{
    // h(d) = dim of degree-2d forms on P^2 = C(2d+2, 2) = 2d^2 + 3d + 1, so the degree is 2! * 2.
    for (long d = 1; d < 8; ++d)
        CHECK(oracle::binomial(2 * d + 2, 2) == 2 * d * d + 3 * d + 1);
    CHECK(harris_tu_degree(3, 1) == 2 * 2);
}

TEST_CASE("diagonal census matches a brute count")
{
    const std::uint32_t p = 7;
    const Field f = Field::prime(p);
    Census c = field_scan(WebOfQuadrics::diagonal(f));
    std::array<std::uint64_t, 5> brute{};
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t cc = 0; cc < p; ++cc)
                for (std::uint32_t d = 0; d < p; ++d) {
                    const std::uint32_t x[4] = {a, b, cc, d};
                    int first = -1;
                    for (int i = 0; i < 4 && first < 0; ++i)
                        if (x[i])
                            first = i;
                    if (first < 0 || x[first] != 1)
                        continue;
                    ++brute[(a != 0) + (b != 0) + (cc != 0) + (d != 0)];
                }
    CHECK(c.by_rank == brute);
    CHECK(c.singular_violations == 0);
    CHECK(census_rows(c).dump() ==
          R"([{"rank":4,"count":216},{"rank":3,"count":144},{"rank":2,"count":36},{"rank":1,"count":4}])");
}

TEST_CASE("bitangent pairs satisfy the polar conditions")
{
    Rng rng(2);
    const Field f = Field::prime(10007);
    for (int t = 0; t < 10; ++t) {
        BitangentFixture fx = bitangent_fixture(f, rng);
        const auto& g = fx.web.generators();
        BitangentPair bp = bitangent_pair(fx.web, {g[0], g[1]}, fx.a, fx.b);
        REQUIRE(bp.status == PairStatus::Pair);
        CHECK(satisfies_polars(fx.web, bp.x, bp.y));
        BitangentPair swapped = bitangent_pair(fx.web, {g[0], g[1]}, fx.b, fx.a);
        CHECK(swapped.x == bp.x);
        CHECK(swapped.y == bp.y);
    }
    BitangentFixture fx = bitangent_fixture(f, rng, true);
    const auto& g = fx.web.generators();
    CHECK(bitangent_pair(fx.web, {g[0], g[1]}, fx.a, fx.b).status == PairStatus::Tangent);
}

TEST_CASE("Veronese independence")
{
    const Field f = Field::prime(101);
    std::vector<Vector> pts;
    for (long i = 0; i < 4; ++i) {
        Vector v = zero_vector(f, 4);
        v[i] = Scalar::one(f);
        pts.push_back(v);
    }
    CHECK(veronese_independence(pts) == 4);
    CHECK(veronese(pts[0]).size() == 10);
    // four points on a line: conics restricted to a line have 3 coefficients
    std::vector<Vector> line;
    for (long t = 1; t <= 4; ++t)
        line.push_back({Scalar::one(f), Scalar(f, t), Scalar::zero(f), Scalar::zero(f)});
    CHECK(veronese_independence(line) == 3);
}
