#include <map>

#include <doctest.h>

#include "sextic/schubert.hpp"

using namespace sextic::schubert;

namespace {

// Number of ways to reach the full 2 x (n-2) box from the empty shape by adding
// a single box (for sigma_1) or one box in each row (for sigma_11).
long gr2_paths(unsigned n, unsigned ones, unsigned elevens)
{
    const unsigned w = n - 2;
    std::map<std::pair<unsigned, unsigned>, long> cur{{{0, 0}, 1}};
    auto step = [&](bool eleven) {
        std::map<std::pair<unsigned, unsigned>, long> next;
        for (auto [shape, c] : cur) {
            auto [a, b] = shape;
            if (eleven) {
                if (a + 1 <= w)
                    next[{a + 1, b + 1}] += c;
            } else {
                if (a + 1 <= w)
                    next[{a + 1, b}] += c;
                if (b + 1 <= a)
                    next[{a, b + 1}] += c;
            }
        }
        cur = next;
    };
    for (unsigned i = 0; i < elevens; ++i)
        step(true);
    for (unsigned i = 0; i < ones; ++i)
        step(false);
    return cur.count({w, w}) ? cur[{w, w}] : 0;
}

// Hook length count of standard tableaux of a rows x cols rectangle.
mpz_class rectangle_syt(unsigned rows, unsigned cols)
{
    mpz_class num = 1, den = 1;
    for (unsigned i = 1; i <= rows * cols; ++i)
        num *= i;
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j)
            den *= (rows - i) + (cols - j) - 1;
    return num / den;
}

} // namespace

TEST_CASE("Pieri on Gr(2,6)")
{
    const Grassmannian g{2, 6};
    const SchubertClass s1 = SchubertClass::sigma(g, {1});
    CHECK((s1 * s1).to_string() == "σ11 + σ2");
    CHECK(SchubertClass::sigma(g, {4, 3}) * s1 == SchubertClass::sigma(g, {4, 4}));
    CHECK((SchubertClass::sigma(g, {4, 4}) * s1).is_zero());
}

TEST_CASE("integrals agree with lattice path counts")
{
    const Grassmannian g{2, 6};
    const SchubertClass s1 = SchubertClass::sigma(g, {1}), s11 = SchubertClass::sigma(g, {1, 1});
    for (unsigned b = 0; b <= 4; ++b) {
        const unsigned a = 8 - 2 * b;
        CHECK(integrate(s1.pow(a) * s11.pow(b)) == gr2_paths(6, a, b));
    }
    CHECK(gr2_paths(6, 6, 1) == 5);
    CHECK(gr2_paths(6, 4, 2) == 2);
    CHECK(gr2_paths(6, 2, 3) == 1);
}

TEST_CASE("degrees of Grassmannians are rectangle tableau counts")
{
    for (auto [k, n] : {std::pair{2u, 6u}, {2u, 5u}, {3u, 6u}, {3u, 7u}}) {
        const Grassmannian g{k, n};
        CHECK(integrate(SchubertClass::sigma(g, {1}).pow(g.dim())) == rectangle_syt(k, n - k));
    }
    CHECK(rectangle_syt(2, 4) == 14);
    CHECK(rectangle_syt(3, 4) == 462);
}

TEST_CASE("duality on Gr(2,6)")
{
    const Grassmannian g{2, 6};
    for (const auto& p : box_partitions(g)) {
        const Partition c = complement(g, p);
        CHECK(integrate(SchubertClass::sigma(g, p) * SchubertClass::sigma(g, c)) == 1);
    }
    CHECK(box_partitions(g).size() == 15);
}

TEST_CASE("top Chern class of Sym^6 of the dual tautological bundle")
{
    // Roots a x1 + (6-a) x2, a = 0..6, evaluated at integer points against
    // 432 e1 e2 (5 e1^2 + 16 e2)(2 e1^2 + e2).
    for (long x1 = -3; x1 <= 3; ++x1)
        for (long x2 = -3; x2 <= 3; ++x2) {
            mpz_class prod = 1;
            for (long a = 0; a <= 6; ++a)
                prod *= a * x1 + (6 - a) * x2;
            const mpz_class e1 = x1 + x2, e2 = x1 * x2;
            CHECK(prod == 432 * e1 * e2 * (5 * e1 * e1 + 16 * e2) * (2 * e1 * e1 + e2));
            mpz_class from_table = 0;
            for (const auto& [pq, c] : sym_power_roots_in_elementary(6)) {
                mpz_class t = c;
                for (unsigned i = 0; i < pq.first; ++i)
                    t *= e1;
                for (unsigned i = 0; i < pq.second; ++i)
                    t *= e2;
                from_table += t;
            }
            CHECK(from_table == prod);
        }
    // 432 (10 e1^5 e2 + 37 e1^3 e2^2 + 16 e1 e2^3); pairing with sigma_1 gives the
    // coefficient of sigma_43.
    const mpz_class expected = 432 * (10 * gr2_paths(6, 6, 1) + 37 * gr2_paths(6, 4, 2) + 16 * gr2_paths(6, 2, 3));
    CHECK(expected == 60480);
    CHECK(sym6_top_chern() == SchubertClass::sigma({2, 6}, {4, 3}, expected));
}

TEST_CASE("lines on cubic surfaces and quintic threefolds")
{
    CHECK(sym_power_top_chern({2, 4}, 3) == SchubertClass::sigma({2, 4}, {2, 2}, 27));
    CHECK(sym_power_top_chern({2, 5}, 5) == SchubertClass::sigma({2, 5}, {3, 3}, 2875));
}
