#include <doctest.h>

#include "oracles.hpp"
#include "sextic/epw.hpp"
#include "sextic/incidence.hpp"

using namespace sextic;

namespace {

const Field f = Field::prime(10007);

Vector combination(const Subspace& s, Rng& rng)
{
    Vector v = zero_vector(s.field(), s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        v = axpy(rng.scalar(s.field()), s.basis_vector(i), v);
    return v;
}

} // namespace

TEST_CASE("Sym^2 dimension")
{
    for (long m = 0; m < 12; ++m)
        CHECK(incidence::sym2_dim(m) == static_cast<std::size_t>(oracle::binomial(m + 1, 2)));
}

TEST_CASE("evaluation row reproduces the quadratic form")
{
    Rng rng(1);
    Subspace a = exterior::random_lagrangian(f, rng);
    Vector c(incidence::sym2_dim(10));
    for (auto& x : c)
        x = rng.scalar(f);
    incidence::QuadraticFormOn q = incidence::form_from_coefficients(a, c);
    for (int t = 0; t < 5; ++t) {
        Vector x = combination(a, rng);
        CHECK(q(x) == dot(incidence::sym2_evaluation_row(a.coordinates(x)), c));
    }
}

TEST_CASE("pencil through a nine-dimensional isotropic subspace")
{
    Rng rng(2);
    Subspace a = exterior::random_lagrangian(f, rng);
    Subspace u = incidence::random_hyperplane_through(a, combination(a, rng), rng);
    CHECK(u.dim() == 9);
    incidence::LagrangianPencil p = incidence::pencil_through(u);
    CHECK(incidence::is_member(p, a));
    for (long t = 0; t < 5; ++t) {
        Subspace m = p.member(Scalar(f, t), Scalar::one(f));
        CHECK(exterior::is_lagrangian(m));
        CHECK(m.contains(u));
    }
    CHECK_FALSE(incidence::is_member(p, exterior::random_lagrangian(f, rng)));
}

TEST_CASE("tangent space of the incidence")
{
    Rng rng(3);
    Subspace a = exterior::random_lagrangian(f, rng);
    Subspace u = incidence::random_hyperplane_through(a, combination(a, rng), rng);
    Subspace b = incidence::pencil_through(u).member(Scalar(f, 5L), Scalar(f, 7L));
    REQUIRE(meet(a, b) == u);
    // n + C(n+1, 2) with n = 10
    CHECK(incidence::omega_tangent_dim(a, b) == 10 + 55);
    CHECK(incidence::omega_tangent_dim(a, b, false) == 2 * 55);
    CHECK(incidence::perp_sum_identity(a, b));
}

TEST_CASE("injectivity of the differential over Q")
{
    Rng rng(4);
    const Field q = Field::rational();
    Subspace b = exterior::random_lagrangian(q, rng);
    Subspace u = incidence::random_hyperplane_through(b, combination(b, rng), rng);
    std::vector<Vector> alphas;
    while (alphas.size() < 10) {
        Vector x = combination(b, rng);
        std::vector<Vector> trial = alphas;
        trial.push_back(x);
        if (!u.contains(x) && rank(Matrix::from_rows(q, 20, trial)) == trial.size())
            alphas = trial;
    }
    CHECK(incidence::injective_differential_kernel(b, u, alphas) == 0);
    alphas.pop_back();
    CHECK(incidence::injective_differential_kernel_relaxed(b, u, alphas) >= 1);
}

TEST_CASE("tangency scenario")
{
    Rng rng(5);
    for (int t = 0; t < 10; ++t)
        CHECK(incidence::tangency_scenario(f, rng).all());
}

TEST_CASE("tangent space of Sigma cut by decomposables")
{
    Rng rng(6);
    const Matrix id = Matrix::identity(f, 4);
    Subspace a = epw::a_plus(id).lagrangian();
    std::vector<Vector> alphas;
    for (std::size_t i = 0; i < 4; ++i) {
        Vector u = zero_vector(f, 4);
        u[i] = Scalar::one(f);
        alphas.push_back(exterior::decomposable_of(epw::iota_plus(id, u)).coords());
    }
    CHECK(incidence::sigma_tangent_space(a, alphas).forms.dim() == 55 - 4);
}
