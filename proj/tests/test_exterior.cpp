#include <bit>

#include <doctest.h>

#include "oracles.hpp"
#include "sextic/exterior.hpp"

using namespace sextic;
using exterior::ExteriorVector;

TEST_CASE("merge sign is the parity of the shuffle")
{
    for (exterior::Mask s = 0; s < 64; ++s)
        for (exterior::Mask t = 0; t < 64; ++t) {
            if (s & t)
                continue;
            std::vector<int> p;
            for (int i = 0; i < 6; ++i)
                if (s >> i & 1)
                    p.push_back(i);
            for (int i = 0; i < 6; ++i)
                if (t >> i & 1)
                    p.push_back(i);
            CHECK(exterior::merge_sign(s, t) == oracle::permutation_sign(p));
        }
}

TEST_CASE("grade sizes")
{
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(exterior::grade_size(k) == static_cast<std::size_t>(oracle::binomial(6, k)));
        for (auto m : exterior::subsets(k))
            CHECK(static_cast<std::size_t>(std::popcount(m)) == k);
    }
    CHECK_THROWS_AS(exterior::wedge(ExteriorVector::basis(Field::rational(), 7),
                                    ExteriorVector::basis(Field::rational(), 56 | 1)),
                    exterior::GradeOverflow);
}

TEST_CASE("symplectic pairing on basis trivectors")
{
    const Field f = Field::prime(101);
    for (auto s : exterior::subsets(3))
        for (auto t : exterior::subsets(3)) {
            Scalar w = exterior::symplectic_form(ExteriorVector::basis(f, s), ExteriorVector::basis(f, t));
            if ((s | t) == 63)
                CHECK(w == Scalar(f, static_cast<long>(exterior::merge_sign(s, t))));
            else
                CHECK(w.is_zero());
        }
}

TEST_CASE("F_v is Lagrangian of dimension ten")
{
    Rng rng(1);
    for (const Field& f : {Field::rational(), Field::prime(10007)})
        for (int t = 0; t < 10; ++t) {
            Vector v(6);
            for (auto& x : v)
                x = rng.scalar(f);
            if (is_zero(v))
                continue;
            Subspace fv = exterior::F_of(ExteriorVector::from_v(v));
            CHECK(fv.dim() == 10);
            CHECK(exterior::is_lagrangian(fv));
            // v wedge anything in F_v vanishes
            for (std::size_t i = 0; i < fv.dim(); ++i)
                CHECK(exterior::wedge(ExteriorVector::from_v(v), ExteriorVector(3, fv.basis_vector(i))).is_zero());
        }
}

TEST_CASE("Lagrangians and completion")
{
    Rng rng(2);
    const Field f = Field::prime(10007);
    Subspace a = exterior::random_lagrangian(f, rng);
    CHECK(a.dim() == 10);
    CHECK(exterior::perp(a) == a);
    Subspace line = Subspace::span(f, 20, {a.basis_vector(0)});
    CHECK(exterior::perp(line).dim() == 19);
    Subspace c = exterior::lagrangian_completion(line, rng);
    CHECK(exterior::is_lagrangian(c));
    CHECK(c.contains(line));
}

TEST_CASE("decomposable trivector of a coordinate plane")
{
    const Field f = Field::rational();
    auto e = [&](std::size_t i) {
        Vector v = zero_vector(f, 6);
        v[i] = Scalar::one(f);
        return v;
    };
    CHECK(exterior::decomposable_of(Subspace::span(f, 6, {e(3), e(4), e(5)})) == ExteriorVector::basis(f, 56));
    CHECK(exterior::decomposable_of(Subspace::span(f, 6, {e(1), e(0), e(2)})) == ExteriorVector::basis(f, 7));
}
