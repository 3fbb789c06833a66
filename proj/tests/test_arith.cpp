#include <doctest.h>

#include "oracles.hpp"
#include "sextic/polynomial.hpp"
#include "sextic/rng.hpp"
#include "sextic/subspace.hpp"

using namespace sextic;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng)
{
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rng.scalar(f);
    return m;
}

} // namespace

TEST_CASE("prime field arithmetic")
{
    const Field f = Field::prime(10007);
    for (long a = 1; a < 200; a += 7) {
        const Scalar x(f, a);
        CHECK((x * x.inverse()).is_one());
        Scalar y = Scalar::one(f);
        for (int k = 0; k < 13; ++k)
            y *= x;
        CHECK(x.pow(13) == y);
    }
    CHECK(Scalar(f, -1L).residue() == 10006);
    CHECK(pow_mod(3, 10006, 10007) == 1);
    CHECK(is_prime_number(10007));
    CHECK_FALSE(is_prime_number(10001));
    CHECK_THROWS_AS(Scalar(f, 1L) + Scalar(Field::prime(101), 1L), FieldMismatch);
}

TEST_CASE("rationals are exact")
{
    const Field q = Field::rational();
    const Scalar third(mpq_class(1, 3));
    CHECK((third + third + third).is_one());
    CHECK((Scalar(q, 2L) / Scalar(q, 4L)).rational() == mpq_class(1, 2));
    CHECK_THROWS(Scalar::zero(q).inverse());
}

TEST_CASE("determinant agrees with the Leibniz expansion")
{
    Rng rng(11);
    for (const Field& f : {Field::prime(10007), Field::rational(), Field::prime(17)})
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + rng.below(5);
            Matrix m = random_matrix(f, n, n, rng);
            CHECK(determinant(m) == oracle::leibniz_det(m));
            CHECK((rank(m) == n) == !oracle::leibniz_det(m).is_zero());
        }
}

TEST_CASE("adjugate times matrix is the determinant")
{
    Rng rng(3);
    const Field f = Field::prime(10007);
    for (int t = 0; t < 10; ++t) {
        Matrix m = random_matrix(f, 4, 4, rng);
        Matrix prod = adjugate(m) * m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(prod(i, j) == (i == j ? determinant(m) : Scalar::zero(f)));
    }
}

TEST_CASE("rank of a product of thin factors")
{
    Rng rng(5);
    const Field q = Field::rational();
    for (int t = 0; t < 10; ++t) {
        const std::size_t r = 1 + rng.below(4);
        Matrix m = random_matrix(q, 6, r, rng) * random_matrix(q, r, 7, rng);
        CHECK(rank(m) <= r);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rref is canonical and solve is consistent")
{
    Rng rng(9);
    const Field f = Field::prime(101);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(f, 3, 6, rng);
        Echelon e = rref(m);
        CHECK(rref(e.reduced).reduced == e.reduced);
        Vector x = random_matrix(f, 1, 6, rng).row(0);
        Vector b = m * x;
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
        Subspace k = kernel_basis(m);
        CHECK(k.dim() + rank(m) == 6);
        for (std::size_t i = 0; i < k.dim(); ++i)
            CHECK(is_zero(m * k.basis_vector(i)));
    }
}

TEST_CASE("meet and join")
{
    const Field f = Field::prime(101);
    auto e = [&](std::size_t i) {
        Vector v = zero_vector(f, 4);
        v[i] = Scalar::one(f);
        return v;
    };
    Subspace a = Subspace::span(f, 4, {e(0), e(1)});
    Subspace b = Subspace::span(f, 4, {e(1), e(2)});
    CHECK(meet(a, b) == Subspace::span(f, 4, {e(1)}));
    CHECK(join(a, b).dim() == 3);
    CHECK(a.annihilator() == Subspace::span(f, 4, {e(2), e(3)}));
}

TEST_CASE("univariate interpolation")
{
    const Field f = Field::prime(10007);
    UniPoly p{Scalar(f, 3L), Scalar(f, 0L), Scalar(f, -2L), Scalar(f, 5L)};
    std::vector<std::pair<Scalar, Scalar>> samples;
    for (long t = 0; t < 7; ++t)
        samples.emplace_back(Scalar(f, t), evaluate(p, Scalar(f, t)));
    CHECK(interpolate_univariate(samples, 6) == p);
    CHECK(degree(p) == 3);
    CHECK(degree(UniPoly{}) == -1);
}

TEST_CASE("multivariate polynomials")
{
    const Field q = Field::rational();
    Polynomial x = Polynomial::variable(q, 2, 0), y = Polynomial::variable(q, 2, 1);
    Polynomial p = x * x * y + y * Scalar(q, 3L);
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.derivative(0) == x * y * Scalar(q, 2L));
    CHECK(p.evaluate({Scalar(q, 2L), Scalar(q, 5L)}) == Scalar(q, 35L));
}
