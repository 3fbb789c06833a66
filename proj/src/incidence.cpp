#include "sextic/incidence.hpp"

#include <stdexcept>

#include "sextic/epw.hpp"

namespace sextic::incidence {

using exterior::kThreeDim;

namespace {

Vector from_coordinates(const Subspace& s, const Vector& c)
{
    Vector v = zero_vector(s.field(), s.ambient_dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero())
            v = axpy(c[i], s.basis_vector(i), v);
    return v;
}

// Row r with B(x, y) = r . c for the polar bilinear form of q.
Vector polar_row(const Vector& x, const Vector& y)
{
    const Field f = x.front().field();
    const Scalar half = Scalar(f, 2L).inverse();
    Vector row;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j)
            row.push_back(i == j ? x[i] * y[i] : (x[i] * y[j] + x[j] * y[i]) * half);
    return row;
}

Vector random_combination(const Subspace& s, Rng& rng)
{
    for (;;) {
        Vector v = zero_vector(s.field(), s.ambient_dim());
        for (std::size_t i = 0; i < s.dim(); ++i)
            v = axpy(rng.scalar(s.field()), s.basis_vector(i), v);
        if (!is_zero(v) || s.dim() == 0)
            return v;
    }
}

void check_lagrangian(const Subspace& a, const char* what)
{
    if (!exterior::is_lagrangian(a))
        throw std::invalid_argument(std::string(what) + " is not Lagrangian");
}

Matrix evaluation_conditions(const Subspace& base, const std::vector<Vector>& xs)
{
    Matrix m(base.field(), 0, sym2_dim(base.dim()));
    for (const auto& x : xs)
        m.append_row(sym2_evaluation_row(base.coordinates(x)));
    return m;
}

} // namespace

std::size_t sym2_dim(std::size_t m)
{
    return m * (m + 1) / 2;
}

Vector sym2_evaluation_row(const Vector& x)
{
    Vector row;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j)
            row.push_back(x[i] * x[j]);
    return row;
}

Matrix restriction_conditions(const Subspace& base, const Subspace& u)
{
    if (!base.contains(u))
        throw std::invalid_argument("restriction_conditions: u is not inside the base");
    std::vector<Vector> ys;
    for (std::size_t k = 0; k < u.dim(); ++k)
        ys.push_back(base.coordinates(u.basis_vector(k)));
    Matrix m(base.field(), 0, sym2_dim(base.dim()));
    for (std::size_t k = 0; k < ys.size(); ++k)
        for (std::size_t l = k; l < ys.size(); ++l)
            m.append_row(polar_row(ys[k], ys[l]));
    return m;
}

Scalar QuadraticFormOn::operator()(const Vector& ambient_vector) const
{
    Vector x = base.coordinates(ambient_vector);
    return dot(x, symmetric * x);
}

QuadraticFormOn form_from_coefficients(const Subspace& base, const Vector& c)
{
    const std::size_t m = base.dim();
    if (c.size() != sym2_dim(m))
        throw std::invalid_argument("coefficient vector has wrong length for Sym^2");
    const Scalar half = Scalar(base.field(), 2L).inverse();
    Matrix s(base.field(), m, m);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j, ++idx) {
            if (i == j) {
                s(i, i) = c[idx];
            } else {
                s(i, j) = c[idx] * half;
                s(j, i) = s(i, j);
            }
        }
    return {base, s};
}

Subspace LagrangianPencil::member(const Scalar& t, const Scalar& s) const
{
    if (t.is_zero() && s.is_zero())
        throw std::invalid_argument("pencil parameter (0:0)");
    Vector x = axpy(t, x0, scaled(s, x1));
    return join(core, Subspace::span(core.field(), core.ambient_dim(), {x}));
}

Subspace LagrangianPencil::a0() const
{
    return member(Scalar::one(core.field()), Scalar::zero(core.field()));
}

Subspace LagrangianPencil::a1() const
{
    return member(Scalar::zero(core.field()), Scalar::one(core.field()));
}

LagrangianPencil pencil_through(const Subspace& u)
{
    if (u.ambient_dim() != kThreeDim || u.dim() != 9)
        throw std::invalid_argument("pencil_through needs a 9-dimensional subspace of the 3-vectors");
    if (!exterior::is_isotropic(u))
        throw std::invalid_argument("pencil_through: subspace is not isotropic");
    Subspace p = exterior::perp(u);
    if (p.dim() != 11 || !p.contains(u))
        throw std::logic_error("perp of an isotropic 9-space must be an 11-space containing it");

    // First two basis vectors of the perp independent modulo u.
    std::vector<Vector> picks;
    Subspace grown = u;
    for (std::size_t i = 0; i < p.dim() && picks.size() < 2; ++i) {
        Vector x = p.basis_vector(i);
        if (grown.contains(x))
            continue;
        picks.push_back(x);
        grown = join(grown, Subspace::span(u.field(), kThreeDim, {x}));
    }
    LagrangianPencil pencil{u, picks.at(0), picks.at(1)};

    const Field f = u.field();
    const Scalar one = Scalar::one(f);
    for (const auto& m : {pencil.a0(), pencil.a1(), pencil.member(one, one)})
        if (!exterior::is_lagrangian(m))
            throw std::logic_error("pencil member is not Lagrangian");
    if (meet(pencil.a0(), pencil.a1()) != u)
        throw std::logic_error("distinct pencil members do not meet in the core");
    return pencil;
}

bool is_member(const LagrangianPencil& pencil, const Subspace& a)
{
    return exterior::is_lagrangian(a) && a.contains(pencil.core) && exterior::perp(pencil.core).contains(a);
}

std::size_t omega_tangent_dim(const Subspace& a, const Subspace& b, bool agreement)
{
    check_lagrangian(a, "A");
    check_lagrangian(b, "B");
    Subspace u = meet(a, b);
    if (u.dim() != 9)
        throw std::invalid_argument("omega_tangent_dim needs dim(A meet B) = 9, got " + std::to_string(u.dim()));
    const std::size_t n = sym2_dim(10);
    if (!agreement)
        return 2 * n;
    Matrix ra = restriction_conditions(a, u);
    Matrix rb = restriction_conditions(b, u);
    Matrix sys(a.field(), ra.rows(), 2 * n);
    for (std::size_t i = 0; i < ra.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sys(i, j) = ra(i, j);
            sys(i, n + j) = -rb(i, j);
        }
    return 2 * n - rank(sys);
}

std::size_t injective_differential_kernel_relaxed(const Subspace& b, const Subspace& u,
                                                  const std::vector<Vector>& alphas)
{
    check_lagrangian(b, "B");
    if (u.dim() != 9 || !b.contains(u))
        throw std::invalid_argument("u must be a hyperplane of B");
    for (const auto& x : alphas)
        if (!b.contains(x))
            throw std::invalid_argument("alpha not in B");
    Matrix sys = Matrix::vstack(restriction_conditions(b, u), evaluation_conditions(b, alphas));
    return sym2_dim(10) - rank(sys);
}

std::size_t injective_differential_kernel(const Subspace& b, const Subspace& u, const std::vector<Vector>& alphas)
{
    if (alphas.size() != 10)
        throw std::invalid_argument("injective_differential_kernel takes 10 alphas");
    if (rank(Matrix::from_rows(b.field(), kThreeDim, alphas)) != 10)
        throw std::invalid_argument("alphas are dependent");
    for (const auto& x : alphas)
        if (u.contains(x))
            throw std::invalid_argument("an alpha lies in u");
    return injective_differential_kernel_relaxed(b, u, alphas);
}

bool perp_sum_identity(const Subspace& a, const Subspace& b)
{
    check_lagrangian(a, "A");
    check_lagrangian(b, "B");
    return exterior::perp(meet(a, b)) == join(a, b);
}

Subspace random_hyperplane_through(const Subspace& s, const Vector& x, Rng& rng)
{
    if (s.dim() == 0)
        throw std::invalid_argument("the zero subspace has no hyperplanes");
    const Field f = s.field();
    Subspace ann = Subspace::span(f, s.dim(), {s.coordinates(x)}).annihilator();
    Vector phi = random_combination(ann, rng);
    Subspace k = kernel_basis(Matrix::from_rows(f, s.dim(), {phi}));
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < k.dim(); ++i)
        gens.push_back(from_coordinates(s, k.basis_vector(i)));
    return Subspace::span(f, s.ambient_dim(), gens);
}

TangencyReport tangency_scenario(const Field& f, Rng& rng, std::size_t budget)
{
    using exterior::ExteriorVector;
    TangencyReport r;
    for (r.attempts = 1; r.attempts <= budget; ++r.attempts) {
        Vector v = epw::random_point(f, rng);
        ExteriorVector ev = ExteriorVector::from_v(v);
        ExteriorVector alpha = exterior::wedge(ev, exterior::random_vector(f, 2, rng));
        if (alpha.is_zero())
            continue;
        Subspace a = exterior::lagrangian_completion(Subspace::span(f, kThreeDim, {alpha.coords()}), rng);
        Subspace u = random_hyperplane_through(a, alpha.coords(), rng);
        LagrangianPencil pencil = pencil_through(u);
        Subspace b = pencil.member(rng.scalar(f), rng.nonzero_scalar(f));
        if (b == a)
            continue;
        Subspace fv = exterior::F_of(ev);
        Subspace fa = meet(fv, a);
        Subspace fb = meet(fv, b);
        if (fa.dim() != 1 || fb.dim() != 1)
            continue;

        Subspace sum = join(a, b);
        Subspace fsum = meet(fv, sum);
        Subspace av = join(meet(a, b), fsum);
        r.common_intersection = fa == fb;
        r.intersection_sum = fsum.dim() == 2;
        r.pencil_member = is_member(pencil, av);
        r.second_stratum = meet(fv, av).dim() >= 2;
        if (!r.all())
            r.witness = "v=" + to_string(v) + " alpha=" + to_string(alpha.coords());
        return r;
    }
    throw std::runtime_error("tangency_scenario: no nondegenerate sample within budget");
}

SigmaTangent sigma_tangent_space(const Subspace& a, const std::vector<Vector>& alphas)
{
    for (const auto& x : alphas)
        if (!a.contains(x))
            throw std::invalid_argument("sigma_tangent_space: alpha not in A");
    const std::size_t n = sym2_dim(a.dim());
    if (alphas.empty())
        return {Subspace::whole(a.field(), n), 0};
    if (rank(Matrix::from_rows(a.field(), a.ambient_dim(), alphas)) != alphas.size())
        throw std::invalid_argument("sigma_tangent_space: alphas are dependent");
    Matrix cond = evaluation_conditions(a, alphas);
    return {kernel_basis(cond), rank(cond)};
}

} // namespace sextic::incidence
