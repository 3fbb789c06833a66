#include "sextic/epw.hpp"

#include <array>
#include <stdexcept>

namespace sextic::epw {

using exterior::ExteriorVector;
using exterior::kDim;
using exterior::kThreeDim;

namespace {

constexpr std::array<std::array<int, 2>, 6> kUPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

Matrix frame_unchecked(const Vector& v, std::size_t c)
{
    const Field f = v.front().field();
    ExteriorVector ev = ExteriorVector::from_v(v);
    Matrix m(f, 10, kThreeDim);
    std::size_t row = 0;
    for (exterior::Mask s : exterior::subsets(2)) {
        if (s & (1u << c))
            continue;
        m.set_row(row++, exterior::wedge(ev, ExteriorVector::basis(f, s)).coords());
    }
    return m;
}

Scalar det_unchecked(const EpwDatum& a, const Vector& v, std::size_t c)
{
    return determinant(frame_unchecked(v, c) * a.paired());
}

void check_point(const Vector& v)
{
    if (v.size() != kDim)
        throw std::invalid_argument("a point of P(V) has 6 coordinates");
    if (is_zero(v))
        throw std::invalid_argument("the zero vector is not a point of P(V)");
}

// Deterministic sample of coefficient vectors spanning enough of U for both
// constructions: the fifteen nonzero 0/1 vectors and five further points.
std::vector<std::array<long, 4>> u_samples()
{
    std::vector<std::array<long, 4>> out;
    for (int m = 1; m < 16; ++m)
        out.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
    out.push_back({1, 2, 3, 4});
    out.push_back({4, 3, 2, 1});
    out.push_back({1, -1, 2, -2});
    out.push_back({2, 1, -1, 3});
    out.push_back({3, -2, 1, 1});
    return out;
}

Vector combine(const Matrix& ubasis, const Vector& coeffs)
{
    Vector u = zero_vector(ubasis.field(), 4);
    for (std::size_t i = 0; i < 4; ++i)
        u = axpy(coeffs[i], ubasis.row(i), u);
    return u;
}

Vector to_vector(const Field& f, const std::array<long, 4>& a)
{
    return {Scalar(f, a[0]), Scalar(f, a[1]), Scalar(f, a[2]), Scalar(f, a[3])};
}

void check_ubasis(const Matrix& ubasis)
{
    if (ubasis.rows() != 4 || ubasis.cols() != 4)
        throw std::invalid_argument("U basis must be a 4x4 matrix");
    if (rank(ubasis) != 4)
        throw std::invalid_argument("degenerate U basis");
}

} // namespace

EpwDatum::EpwDatum(Subspace a) : a_(std::move(a)), paired_(exterior::gram(a_.field()) * a_.basis().transpose())
{
    if (!exterior::is_lagrangian(a_))
        throw std::invalid_argument("EpwDatum requires a Lagrangian subspace");
}

std::size_t chart_of(const Vector& v)
{
    check_point(v);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            return i;
    return 0;
}

Matrix chart_frame(const Vector& v, std::size_t c)
{
    check_point(v);
    if (c >= kDim || v[c].is_zero())
        throw std::invalid_argument("chart " + std::to_string(c) + " is not valid at " + to_string(v));
    return frame_unchecked(v, c);
}

std::size_t fiber_intersection_dim(const EpwDatum& a, const Vector& v)
{
    check_point(v);
    Matrix stacked = Matrix::vstack(exterior::F_of(ExteriorVector::from_v(v)).basis(), a.lagrangian().basis());
    return 20 - rank(stacked);
}

Matrix pairing_matrix(const EpwDatum& a, const Vector& v, std::size_t c)
{
    return chart_frame(v, c) * a.paired();
}

Scalar chart_det(const EpwDatum& a, const Vector& v, std::size_t c)
{
    return determinant(pairing_matrix(a, v, c));
}

UniPoly sextic_on_line(const EpwDatum& a, const Vector& p, const Vector& q, std::size_t c)
{
    check_point(p);
    if (q.size() != kDim)
        throw std::invalid_argument("line direction has 6 coordinates");
    if (c >= kDim || !p[c].is_one() || !q[c].is_zero())
        throw std::invalid_argument("sextic_on_line needs p_c = 1 and q_c = 0");
    const Field f = a.field();
    std::vector<std::pair<Scalar, Scalar>> samples;
    for (long t = 0; t <= 10; ++t) {
        Scalar st(f, t);
        samples.emplace_back(st, det_unchecked(a, axpy(st, q, p), c));
    }
    return interpolate_univariate(samples, 6);
}

Vector gradient_det(const EpwDatum& a, const Vector& v0, std::size_t c)
{
    chart_frame(v0, c);
    const Field f = a.field();
    Vector grad;
    for (std::size_t k = 0; k < kDim; ++k) {
        std::vector<std::pair<Scalar, Scalar>> samples;
        for (long t = 0; t <= 10; ++t) {
            Vector v = v0;
            v[k] += Scalar(f, t);
            samples.emplace_back(Scalar(f, t), det_unchecked(a, v, c));
        }
        UniPoly p = interpolate_univariate(samples, 10);
        grad.push_back(p.size() > 1 ? p[1] : Scalar::zero(f));
    }
    return grad;
}

FiberGenerator fiber_generator(const EpwDatum& a, const Vector& v0)
{
    check_point(v0);
    ExteriorVector v = ExteriorVector::from_v(v0);
    Subspace m = meet(exterior::F_of(v), a.lagrangian());
    if (m.dim() != 1)
        throw std::invalid_argument("F_v0 meets A in dimension " + std::to_string(m.dim()) + ", not 1");
    ExteriorVector gamma(3, m.basis_vector(0));
    return {gamma, exterior::quotient_by(v, gamma)};
}

bool smooth_predicate(const EpwDatum& a, const Vector& v0)
{
    if (fiber_intersection_dim(a, v0) != 1)
        return false;
    FiberGenerator g = fiber_generator(a, v0);
    return !exterior::wedge(ExteriorVector::from_v(v0), exterior::wedge(g.alpha, g.alpha)).is_zero();
}

Vector tangent_functional(const EpwDatum& a, const Vector& v0, const ExteriorVector& alpha)
{
    check_point(v0);
    if (alpha.grade() != 2)
        throw std::invalid_argument("tangent_functional expects a 2-vector alpha");
    ExteriorVector v = ExteriorVector::from_v(v0);
    ExteriorVector gamma = exterior::wedge(v, alpha);
    Subspace m = meet(exterior::F_of(v), a.lagrangian());
    if (m.dim() != 1 || gamma.is_zero() || !m.contains(gamma.coords()))
        throw std::invalid_argument("tangent_functional: F_v0 meet A is not spanned by v0 ^ alpha");
    const Field f = a.field();
    ExteriorVector aa = exterior::wedge(alpha, alpha);
    Vector out;
    for (std::size_t k = 0; k < kDim; ++k) {
        ExteriorVector vk = exterior::wedge(v, ExteriorVector::basis(f, static_cast<exterior::Mask>(1u << k)));
        out.push_back(exterior::vol(exterior::wedge(vk, aa)));
    }
    return out;
}

Vector tangent_functional(const EpwDatum& a, const Vector& v0)
{
    return tangent_functional(a, v0, fiber_generator(a, v0).alpha);
}

std::optional<Scalar> proportionality(const Vector& x, const Vector& y)
{
    if (x.size() != y.size() || is_zero(x) || is_zero(y))
        return std::nullopt;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i].is_zero())
            continue;
        Scalar lambda = x[i] / y[i];
        if (x == scaled(lambda, y))
            return lambda;
        return std::nullopt;
    }
    return std::nullopt;
}

Vector wedge_in_u(const Vector& u, const Vector& w)
{
    if (u.size() != 4 || w.size() != 4)
        throw std::invalid_argument("vectors of U have 4 coordinates");
    Vector out;
    for (const auto& [i, j] : kUPairs)
        out.push_back(u[i] * w[j] - u[j] * w[i]);
    return out;
}

Subspace iota_plus(const Matrix& ubasis, const Vector& coeffs)
{
    Vector u = combine(ubasis, coeffs);
    std::vector<Vector> gens;
    for (std::size_t b = 0; b < 4; ++b)
        gens.push_back(wedge_in_u(u, ubasis.row(b)));
    Subspace w = Subspace::span(ubasis.field(), kDim, gens);
    if (w.dim() != 3)
        throw std::invalid_argument("u ^ U needs u != 0");
    return w;
}

EpwDatum a_plus(const Matrix& ubasis)
{
    check_ubasis(ubasis);
    const Field f = ubasis.field();
    std::vector<Vector> gens;
    for (const auto& s : u_samples())
        gens.push_back(exterior::decomposable_of(iota_plus(ubasis, to_vector(f, s))).coords());
    Subspace a = Subspace::span(f, kThreeDim, gens);
    if (a.dim() != 10)
        throw std::logic_error("sampled planes u ^ U span " + std::to_string(a.dim()) + " dimensions, not 10");
    return EpwDatum(std::move(a));
}

EpwDatum a_minus(const Matrix& ubasis)
{
    check_ubasis(ubasis);
    const Field f = ubasis.field();
    std::vector<Vector> gens;
    for (const auto& s : u_samples()) {
        Subspace k = kernel_basis(Matrix::from_rows(f, 4, {to_vector(f, s)}));
        std::vector<Vector> kb;
        for (std::size_t i = 0; i < 3; ++i)
            kb.push_back(combine(ubasis, k.basis_vector(i)));
        Subspace w = Subspace::span(
            f, kDim, {wedge_in_u(kb[0], kb[1]), wedge_in_u(kb[0], kb[2]), wedge_in_u(kb[1], kb[2])});
        gens.push_back(exterior::decomposable_of(w).coords());
    }
    Subspace a = Subspace::span(f, kThreeDim, gens);
    if (a.dim() != 10)
        throw std::logic_error("sampled planes of 2-vectors of hyperplanes span " + std::to_string(a.dim()) +
                               " dimensions, not 10");
    return EpwDatum(std::move(a));
}

Scalar plucker_quadric(const Vector& v)
{
    if (v.size() != kDim)
        throw std::invalid_argument("plucker_quadric expects 6 coordinates");
    return v[0] * v[5] - v[1] * v[4] + v[2] * v[3];
}

Vector random_point(const Field& f, Rng& rng)
{
    for (;;) {
        Vector v;
        for (std::size_t i = 0; i < kDim; ++i)
            v.push_back(rng.scalar(f));
        if (!is_zero(v))
            return v;
    }
}

namespace {

Vector random_chart0_point(const Field& f, Rng& rng)
{
    Vector v{Scalar::one(f)};
    for (std::size_t i = 1; i < kDim; ++i)
        v.push_back(rng.scalar(f));
    return v;
}

} // namespace

TripleQuadricResult verify_triple_quadric(const EpwDatum& a, std::size_t trials, Rng& rng)
{
    const Field f = a.field();
    TripleQuadricResult r;
    for (std::size_t t = 0; t < trials; ++t) {
        Vector v = random_chart0_point(f, rng);
        Vector w = random_chart0_point(f, rng);
        Scalar qv = plucker_quadric(v), qw = plucker_quadric(w);
        if (qv.is_zero() || qw.is_zero()) {
            ++r.skipped;
            --t;
            if (r.skipped > trials)
                throw std::runtime_error("verify_triple_quadric: too many samples on the quadric");
            continue;
        }
        ++r.trials;
        Scalar lhs = chart_det(a, v, 0) * qw.pow(3);
        Scalar rhs = chart_det(a, w, 0) * qv.pow(3);
        if (lhs != rhs) {
            r.holds = false;
            if (r.witness.empty())
                r.witness = "v=" + to_string(v) + " w=" + to_string(w);
        }
    }
    return r;
}

bool sigma_membership(const EpwDatum& a, const Subspace& w)
{
    return a.lagrangian().contains(exterior::decomposable_of(w).coords());
}

PointOnY find_point_on_Y(const EpwDatum& a, Rng& rng, std::size_t budget)
{
    const Field f = a.field();
    if (!f.is_prime())
        throw std::invalid_argument("find_point_on_Y scans a prime field");
    const std::uint64_t p = f.characteristic();
    PointOnY out;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        ++out.lines_tried;
        Vector base = random_chart0_point(f, rng);
        Vector dir = random_point(f, rng);
        dir[0] = Scalar::zero(f);
        if (is_zero(dir))
            continue;
        UniPoly s = sextic_on_line(a, base, dir, 0);
        std::vector<std::uint64_t> c;
        for (const auto& x : s)
            c.push_back(x.residue());
        std::optional<std::uint64_t> root;
        if (c.empty())
            root = 0;
        for (std::uint64_t t = 0; t < p && !root; ++t) {
            std::uint64_t acc = 0;
            for (std::size_t i = c.size(); i-- > 0;)
                acc = (acc * t + c[i]) % p;
            if (acc == 0)
                root = t;
        }
        if (!root)
            continue;
        out.v = axpy(Scalar(f, static_cast<long>(*root)), dir, base);
        if (fiber_intersection_dim(a, out.v) == 0)
            throw std::logic_error("root of the sextic is not on Y_A at " + to_string(out.v));
        return out;
    }
    throw RetryBudgetExhausted("no F_p-point of Y_A found on " + std::to_string(budget) + " lines");
}

} // namespace sextic::epw
