#include <doctest.h>

#include "sextic/chow.hpp"

using namespace sextic::chow;

namespace {

mpq_class fraction(long a, long b)
{
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("splitting principle for a sum of line bundles")
{
    const VarietyModel x;
    const FormalClass h = x.h(), one = x.one();
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 3; ++b) {
            BundleClass sum = BundleClass::from_total(2, (one + h * a) * (one + h * b));
            // exp(a h) + exp(b h)
            FormalClass expected = one * 2;
            FormalClass ta = one, tb = one;
            for (int k = 1; k <= 4; ++k) {
                ta = ta * h * fraction(a, k);
                tb = tb * h * fraction(b, k);
                expected += ta + tb;
            }
            CHECK(ch_total(ch_from_c(sum)) == expected);
        }
}

TEST_CASE("Todd class of a line bundle is x / (1 - e^-x)")
{
    const VarietyModel x;
    const FormalClass h = x.h();
    FormalClass expected = x.one() + h * fraction(1, 2) + h.pow(2) * fraction(1, 12) - h.pow(4) * fraction(1, 720);
    CHECK(todd_from_c(x.line_bundle(1)) == expected);
    CHECK(series_inverse(expected) * expected == x.one());
}

TEST_CASE("degree table")
{
    const VarietyModel x;
    CHECK(x.degree(x.h().pow(4)) == 12);
    CHECK(x.degree(x.h() * x.h() * x.c2()) == 60);
    CHECK(x.degree(x.c2() * x.c2()) == 828);
    CHECK(x.degree(x.c4()) == 324);
    CHECK(x.degree(x.h() * x.h() * x.Z()) == 40);
    CHECK(x.degree(x.c2() * x.Z()) == 24);
    CHECK(x.degree(x.Z() * x.Z()) == 192);
    CHECK(thom_porteous_table_identity(x));
    CHECK(hirzebruch_chi(x) == 3);
    CHECK_THROWS(x.degree(x.h()));
}

TEST_CASE("Riemann-Roch polynomial")
{
    const VarietyModel x;
    for (long n = -3; n <= 5; ++n) {
        mpq_class m = n;
        CHECK(hrr_chi(x, x.line_bundle(n)) == m * m * m * m / 2 + 5 * m * m / 2 + 3);
    }
}

TEST_CASE("Whitney solve recovers the missing term")
{
    const VarietyModel x;
    const FormalClass h = x.h(), one = x.one();
    // 0 -> O(-1) -> O^2 -> Q -> 0 gives c(Q) = 1 / (1 - h)
    BundleClass sub = x.line_bundle(-1), mid = BundleClass::trivial(x.table(), 2);
    BundleClass q = whitney_solve({{false, sub}, {false, mid}, {true, BundleClass::trivial(x.table(), 0)}});
    CHECK(q.rank == 1);
    CHECK(q.total() == one + h + h.pow(2) + h.pow(3) + h.pow(4));
}

TEST_CASE("derived relations")
{
    const VarietyModel x;
    const ChernDerivation s = derive_chern_relations(x);
    const FormalClass h = x.h(), Z = x.Z(), c2 = x.c2();
    CHECK(s.c2h_relation == c2 * h - h.pow(3) * 5);
    CHECK(s.c4_expression == h.pow(4) * 435 - h * h * Z * 180 + Z * Z * 12);
    CHECK(s.c4_in_c2 == h.pow(4) * -165 + h * h * c2 * 20 + c2 * c2 * fraction(4, 3));
    CHECK(s.c4_degree == 324);
    CHECK(s.q_from_cotangent_sub.c[2] == Z * -3);
    CHECK(s.q_from_cotangent_sub.c[3] == h.pow(3) * -70);
    CHECK(s.q_from_extension.c[2] == Z * -3);
    CHECK(s.q_from_extension.c[3] == h * Z * -21);
    CHECK(s.ch_det_tz.to_string() == "Z - 9/2 h Z + 21/2 h^2 Z - 1/12 Z^2");
    CHECK(s.relations.size() == 5);
    CHECK(to_json(s.relations.front()).begin().key() == "lhs");
}

TEST_CASE("local Thom-Porteous model")
{
    CHECK(thom_porteous_local_multiplicity() == 3);
    const auto gens = annihilator_local_model();
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == std::array<unsigned, 2>{2, 0});
    CHECK(gens[2] == std::array<unsigned, 2>{0, 2});
}
