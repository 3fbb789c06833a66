#include <doctest.h>

#include "oracles.hpp"
#include "sextic/epw.hpp"

using namespace sextic;

namespace {

const Field f = Field::prime(10007);

Vector random_vec(std::size_t n, Rng& rng)
{
    Vector v(n);
    for (auto& x : v)
        x = rng.scalar(f);
    return v;
}

} // namespace

TEST_CASE("chart determinant vanishes exactly on Y")
{
    Rng rng(4);
    epw::EpwDatum a(exterior::random_lagrangian(f, rng));
    for (int t = 0; t < 10; ++t) {
        Vector v = epw::find_point_on_Y(a, rng).v;
        CHECK(epw::fiber_intersection_dim(a, v) >= 1);
        CHECK(epw::chart_det(a, v, epw::chart_of(v)).is_zero());
        Vector w = epw::random_point(f, rng);
        CHECK((epw::fiber_intersection_dim(a, w) == 0) == !epw::chart_det(a, w, epw::chart_of(w)).is_zero());
    }
}

TEST_CASE("pairing matrix is 10 x 10 with the chart determinant")
{
    Rng rng(8);
    epw::EpwDatum a(exterior::random_lagrangian(f, rng));
    Vector v = epw::random_point(f, rng);
    const std::size_t c = epw::chart_of(v);
    Matrix m = epw::pairing_matrix(a, v, c);
    CHECK(m.rows() == 10);
    CHECK(m.cols() == 10);
    CHECK(determinant(m) == epw::chart_det(a, v, c));
}

TEST_CASE("restriction to a line is the interpolated sextic")
{
    Rng rng(6);
    epw::EpwDatum a(exterior::random_lagrangian(f, rng));
    Vector p = random_vec(6, rng), q = random_vec(6, rng);
    p[0] = Scalar::one(f);
    q[0] = Scalar::zero(f);
    UniPoly s = epw::sextic_on_line(a, p, q, 0);
    CHECK(degree(s) <= 6);
    for (long t = 20; t < 30; ++t) {
        Vector x = axpy(Scalar(f, t), q, p);
        CHECK(evaluate(s, Scalar(f, t)) == epw::chart_det(a, x, 0));
    }
}

TEST_CASE("the decomposition into A_+ and A_-")
{
    const Matrix id = Matrix::identity(f, 4);
    Subspace p = epw::a_plus(id).lagrangian(), m = epw::a_minus(id).lagrangian();
    CHECK(p.dim() == 10);
    CHECK(m.dim() == 10);
    CHECK(exterior::is_lagrangian(p));
    CHECK(exterior::is_lagrangian(m));
    CHECK(join(p, m).dim() == 20);
}

TEST_CASE("Y of A_+ is the triple Pluecker quadric")
{
    Rng rng(12);
    const Matrix id = Matrix::identity(f, 4);
    CHECK(epw::verify_triple_quadric(epw::a_plus(id), 30, rng).holds);
    CHECK(epw::verify_triple_quadric(epw::a_minus(id), 30, rng).holds);
    CHECK_FALSE(epw::verify_triple_quadric(epw::EpwDatum(exterior::random_lagrangian(f, rng)), 5, rng).holds);
    for (int t = 0; t < 10; ++t)
        CHECK(epw::plucker_quadric(epw::wedge_in_u(random_vec(4, rng), random_vec(4, rng))).is_zero());
}

TEST_CASE("smoothness predicate and the gradient")
{
    Rng rng(13);
    epw::EpwDatum a(exterior::random_lagrangian(f, rng));
    for (int t = 0; t < 10; ++t) {
        Vector v = epw::find_point_on_Y(a, rng).v;
        const Vector g = epw::gradient_det(a, v, epw::chart_of(v));
        CHECK(epw::smooth_predicate(a, v) == !is_zero(g));
        if (epw::smooth_predicate(a, v))
            CHECK(epw::proportionality(g, epw::tangent_functional(a, v)).has_value());
    }
}

TEST_CASE("proportionality")
{
    Vector x{Scalar(f, 1L), Scalar(f, 2L)}, y{Scalar(f, 3L), Scalar(f, 6L)}, z{Scalar(f, 3L), Scalar(f, 5L)};
    CHECK(epw::proportionality(x, y).has_value());
    CHECK_FALSE(epw::proportionality(x, z).has_value());
}

TEST_CASE("planes of a Lagrangian in Sigma are singular")
{
    Rng rng(14);
    Matrix wb(f, 3, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            wb(i, j) = rng.scalar(f);
    Subspace w = Subspace::span(wb);
    REQUIRE(w.dim() == 3);
    auto d = exterior::decomposable_of(w);
    epw::EpwDatum a(exterior::lagrangian_completion(Subspace::span(f, 20, {d.coords()}), rng));
    CHECK(epw::sigma_membership(a, w));
    Vector v = w.basis_vector(0);
    CHECK(epw::fiber_intersection_dim(a, v) >= 1);
    CHECK(is_zero(epw::gradient_det(a, v, epw::chart_of(v))));
    CHECK_FALSE(epw::smooth_predicate(a, v));
}
