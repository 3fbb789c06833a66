#include "sextic/quadrics.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>

namespace sextic::quadrics {

namespace {

using Raw = std::array<std::array<std::uint64_t, 4>, 4>;

std::size_t raw_rank(Raw m, std::uint64_t p)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < 4 && r < 4; ++c) {
        std::size_t piv = r;
        while (piv < 4 && m[piv][c] == 0)
            ++piv;
        if (piv == 4)
            continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(m[r][c]), static_cast<std::uint32_t>(p));
        for (std::size_t i = r + 1; i < 4; ++i) {
            if (m[i][c] == 0)
                continue;
            const std::uint64_t factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < 4; ++j)
                m[i][j] = (m[i][j] + (p - factor) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

std::uint64_t raw_det3(const Raw& m, std::size_t skip_r, std::size_t skip_c, std::uint64_t p)
{
    std::array<std::size_t, 3> rs{}, cs{};
    for (std::size_t i = 0, k = 0; i < 4; ++i)
        if (i != skip_r)
            rs[k++] = i;
    for (std::size_t i = 0, k = 0; i < 4; ++i)
        if (i != skip_c)
            cs[k++] = i;
    auto e = [&](std::size_t i, std::size_t j) { return m[rs[i]][cs[j]]; };
    std::uint64_t pos = (e(0, 0) * e(1, 1) % p * e(2, 2) + e(0, 1) * e(1, 2) % p * e(2, 0) +
                         e(0, 2) * e(1, 0) % p * e(2, 1)) % p;
    std::uint64_t neg = (e(0, 2) * e(1, 1) % p * e(2, 0) + e(0, 0) * e(1, 2) % p * e(2, 1) +
                         e(0, 1) * e(1, 0) % p * e(2, 2)) % p;
    return (pos + p - neg) % p;
}

// trace(adj(M) Q_k) for k = 0..3.
std::array<std::uint64_t, 4> raw_gradient(const Raw& m, const std::array<Raw, 4>& q, std::uint64_t p)
{
    Raw adj{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::uint64_t minor = raw_det3(m, j, i, p);
            adj[i][j] = (i + j) % 2 ? (p - minor) % p : minor;
        }
    std::array<std::uint64_t, 4> g{};
    for (std::size_t k = 0; k < 4; ++k) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                s = (s + adj[i][j] * q[k][j][i]) % p;
        g[k] = s;
    }
    return g;
}

Raw to_raw(const Matrix& m)
{
    Raw r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r[i][j] = m(i, j).residue();
    return r;
}

Scalar bilinear(const Matrix& q, const Vector& x, const Vector& y)
{
    return dot(x, q * y);
}

// 2x2 block of q on the line spanned by a, b, as (B00, B01, B11).
Vector restrict_to_line(const Matrix& q, const Vector& a, const Vector& b)
{
    return {bilinear(q, a, a), bilinear(q, a, b), bilinear(q, b, b)};
}

// Square root in the field, if one exists.
std::optional<Scalar> square_root(const Scalar& x)
{
    const Field f = x.field();
    if (x.is_zero())
        return x;
    if (f.is_rational()) {
        const mpq_class& q = x.rational();
        if (q < 0)
            return std::nullopt;
        mpz_class n = q.get_num(), d = q.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Scalar(mpq_class(rn, rd));
    }
    // Tonelli-Shanks.
    const std::uint64_t p = f.characteristic();
    const std::uint64_t a = x.residue();
    if (pow_mod(a, (p - 1) / 2, static_cast<std::uint32_t>(p)) != 1)
        return std::nullopt;
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, static_cast<std::uint32_t>(p)) != p - 1)
        ++z;
    std::uint64_t m = s, c = pow_mod(z, q, static_cast<std::uint32_t>(p));
    std::uint64_t t = pow_mod(a, q, static_cast<std::uint32_t>(p));
    std::uint64_t r = pow_mod(a, (q + 1) / 2, static_cast<std::uint32_t>(p));
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        std::uint64_t bexp = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k)
            bexp = bexp * bexp % p;
        m = i;
        c = bexp * bexp % p;
        t = t * c % p;
        r = r * bexp % p;
    }
    return Scalar(f, static_cast<long>(r));
}

bool vector_less(const Vector& a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            continue;
        if (a[i].field().is_rational())
            return a[i].rational() < b[i].rational();
        return a[i].residue() < b[i].residue();
    }
    return false;
}

} // namespace

WebOfQuadrics::WebOfQuadrics(std::array<Matrix, 4> q) : q_(std::move(q))
{
    Matrix flat(q_[0].field(), 0, 16);
    for (const auto& m : q_) {
        if (m.rows() != 4 || m.cols() != 4 || !m.is_symmetric())
            throw std::invalid_argument("web generators must be symmetric 4x4 matrices");
        Vector row;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                row.push_back(m(i, j));
        flat.append_row(row);
    }
    if (rank(flat) != 4)
        throw std::invalid_argument("web generators are linearly dependent");
}

Matrix WebOfQuadrics::member(const Vector& t) const
{
    if (t.size() != 4)
        throw std::invalid_argument("a point of the web has 4 coordinates");
    Matrix m(field(), 4, 4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) += t[k] * q_[k](i, j);
    return m;
}

WebOfQuadrics WebOfQuadrics::diagonal(const Field& f)
{
    std::array<Matrix, 4> q{Matrix(f, 4, 4), Matrix(f, 4, 4), Matrix(f, 4, 4), Matrix(f, 4, 4)};
    for (std::size_t i = 0; i < 4; ++i)
        q[i](i, i) = Scalar::one(f);
    return WebOfQuadrics(std::move(q));
}

Matrix random_symmetric(const Field& f, std::size_t n, Rng& rng)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = rng.scalar(f);
            m(j, i) = m(i, j);
        }
    return m;
}

WebOfQuadrics WebOfQuadrics::random(const Field& f, Rng& rng)
{
    for (;;) {
        try {
            return WebOfQuadrics({random_symmetric(f, 4, rng), random_symmetric(f, 4, rng),
                                  random_symmetric(f, 4, rng), random_symmetric(f, 4, rng)});
        } catch (const std::invalid_argument&) {
        }
    }
}

std::size_t member_rank(const WebOfQuadrics& web, const Vector& t)
{
    if (is_zero(t))
        throw std::invalid_argument("member_rank at the zero vector");
    return rank(web.member(t));
}

Polynomial quartic_surface(const WebOfQuadrics& web)
{
    const Field f = web.field();
    // Entry (i, j) of Q(t) as a linear form.
    auto entry = [&](std::size_t i, std::size_t j) {
        Polynomial p(f, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            Polynomial::Exponents e(4, 0);
            e[k] = 1;
            p.add_term(e, web.generators()[k](i, j));
        }
        return p;
    };
    Polynomial det(f, 4);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Polynomial term = Polynomial::constant(f, 4, Scalar(f, inversions % 2 ? -1L : 1L));
        for (std::size_t i = 0; i < 4; ++i)
            term = term * entry(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (det.is_zero())
        throw std::invalid_argument("degenerate web: determinant vanishes identically");
    return det;
}

Vector jacobi_gradient(const WebOfQuadrics& web, const Vector& t)
{
    Matrix adj = adjugate(web.member(t));
    Vector g;
    for (const auto& q : web.generators()) {
        Matrix prod = adj * q;
        Scalar tr = Scalar::zero(web.field());
        for (std::size_t i = 0; i < 4; ++i)
            tr += prod(i, i);
        g.push_back(tr);
    }
    return g;
}

mpz_class harris_tu_degree(unsigned n, unsigned r)
{
    if (r >= n)
        throw std::invalid_argument("harris_tu_degree needs r < n");
    auto binom = [](unsigned a, unsigned b) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), a, b);
        return c;
    };
    mpq_class d = 1;
    for (unsigned a = 0; a + r < n; ++a)
        d *= mpq_class(binom(n + a, n - r - a), binom(2 * a + 1, a));
    d.canonicalize();
    if (d.get_den() != 1)
        throw std::logic_error("Harris-Tu product is not an integer");
    return d.get_num();
}

std::string to_string(PairStatus s)
{
    switch (s) {
    case PairStatus::Pair:
        return "pair";
    case PairStatus::Tangent:
        return "tangent";
    case PairStatus::Irrational:
        return "irrational";
    }
    return "?";
}

Vector normalize_projective_or_zero(const Vector& v)
{
    for (const auto& c : v)
        if (!c.is_zero())
            return scaled(c.inverse(), v);
    return v;
}

Vector normalize_projective(const Vector& v)
{
    if (is_zero(v))
        throw std::invalid_argument("zero vector has no projective point");
    return normalize_projective_or_zero(v);
}

BitangentPair bitangent_pair(const WebOfQuadrics& web, const std::array<Matrix, 2>& pencil, const Vector& a,
                             const Vector& b)
{
    const Field f = web.field();
    if (rank(Matrix::from_rows(f, 4, {a, b})) != 2)
        throw std::invalid_argument("line needs two independent points");

    Matrix blocks(f, 0, 3);
    for (const auto& q : web.generators())
        blocks.append_row(restrict_to_line(q, a, b));
    for (const auto& q : pencil)
        if (!is_zero(restrict_to_line(q, a, b)))
            throw std::invalid_argument("pencil member does not contain the line");
    Matrix pencil_flat(f, 0, 16), web_flat(f, 0, 16);
    for (const auto& q : pencil) {
        Vector row;
        for (std::size_t i = 0; i < 16; ++i)
            row.push_back(q(i / 4, i % 4));
        pencil_flat.append_row(row);
    }
    for (const auto& q : web.generators()) {
        Vector row;
        for (std::size_t i = 0; i < 16; ++i)
            row.push_back(q(i / 4, i % 4));
        web_flat.append_row(row);
    }
    if (rank(pencil_flat) != 2 || rank(Matrix::vstack(web_flat, pencil_flat)) != 4)
        throw std::invalid_argument("pencil must be two independent members of the web");

    Subspace residual = Subspace::span(blocks);
    if (residual.dim() < 2)
        throw std::invalid_argument("residual system is degenerate: infinitely many solutions on the line");
    auto as_matrix = [&](const Vector& c) { return Matrix::from_rows(f, 2, {{c[0], c[1]}, {c[1], c[2]}}); };
    Matrix b1 = as_matrix(residual.basis_vector(0));
    Matrix b2 = as_matrix(residual.basis_vector(1));

    // det[B1 s, B2 s] = ca s0^2 + cb s0 s1 + cc s1^2.
    auto minor = [&](const Vector& s) {
        Vector u = b1 * s, w = b2 * s;
        return u[0] * w[1] - u[1] * w[0];
    };
    const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    const Scalar ca = minor({one, zero});
    const Scalar cc = minor({zero, one});
    const Scalar cb = minor({one, one}) - ca - cc;
    if (ca.is_zero() && cb.is_zero() && cc.is_zero())
        throw std::invalid_argument("residual system is identically zero on the line");

    std::vector<Vector> params;
    const Scalar disc = cb * cb - Scalar(f, 4L) * ca * cc;
    PairStatus status = disc.is_zero() ? PairStatus::Tangent : PairStatus::Pair;
    if (ca.is_zero()) {
        params.push_back({one, zero});
        params.push_back(cb.is_zero() ? Vector{one, zero} : Vector{-cc, cb});
    } else {
        auto root = square_root(disc);
        if (!root)
            return {PairStatus::Irrational, {}, {}};
        const Scalar den = (Scalar(f, 2L) * ca).inverse();
        params.push_back({(-cb + *root) * den, one});
        params.push_back({(-cb - *root) * den, one});
    }
    std::vector<Vector> pts;
    for (const auto& s : params)
        pts.push_back(normalize_projective(axpy(s[0], a, scaled(s[1], b))));
    if (vector_less(pts[1], pts[0]))
        std::swap(pts[0], pts[1]);
    return {status, pts[0], pts[1]};
}

bool satisfies_polars(const WebOfQuadrics& web, const Vector& x, const Vector& y)
{
    for (const auto& q : web.generators())
        if (!bilinear(q, x, y).is_zero())
            return false;
    return true;
}

BitangentFixture bitangent_fixture(const Field& f, Rng& rng, bool double_point)
{
    const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    for (;;) {
        Scalar s = rng.nonzero_scalar(f);
        Scalar t = double_point ? s : rng.nonzero_scalar(f);
        if (!double_point && s == t)
            continue;
        Vector x{one, s, zero, zero}, y{one, t, zero, zero};
        std::array<Matrix, 4> q{random_symmetric(f, 4, rng), random_symmetric(f, 4, rng),
                                random_symmetric(f, 4, rng), random_symmetric(f, 4, rng)};
        // The pencil contains the line: its 2x2 block on e0, e1 vanishes.
        for (std::size_t k = 0; k < 2; ++k)
            q[k](0, 0) = q[k](0, 1) = q[k](1, 0) = q[k](1, 1) = zero;
        // Residual members: x^T Q y = Q00 + (s + t) Q01 + s t Q11 = 0.
        for (std::size_t k = 2; k < 4; ++k) {
            q[k](1, 1) = -(q[k](0, 0) + (s + t) * q[k](0, 1)) / (s * t);
        }
        const Vector a{one, zero, zero, zero}, b{zero, one, zero, zero};
        if (rank(Matrix::from_rows(f, 3, {restrict_to_line(q[2], a, b), restrict_to_line(q[3], a, b)})) != 2)
            continue;
        try {
            WebOfQuadrics web(std::move(q));
            return {web, {one, zero, zero, zero}, {zero, one, zero, zero}, x, y};
        } catch (const std::invalid_argument&) {
        }
    }
}

Vector veronese(const Vector& point)
{
    if (point.size() != 4)
        throw std::invalid_argument("veronese expects a point of P^3");
    Vector out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
            out.push_back(point[i] * point[j]);
    return out;
}

std::size_t veronese_independence(const std::vector<Vector>& points)
{
    if (points.empty())
        return 0;
    std::vector<Vector> rows;
    for (const auto& p : points) {
        if (is_zero(p))
            throw std::invalid_argument("veronese_independence: zero point");
        rows.push_back(veronese(p));
    }
    return rank(Matrix::from_rows(points.front().front().field(), 10, rows));
}

Census field_scan(const WebOfQuadrics& web, unsigned workers)
{
    const Field f = web.field();
    if (!f.is_prime())
        throw std::invalid_argument("field_scan needs a prime field");
    const std::uint64_t p = f.characteristic();
    if (p > kScanGuard)
        throw std::invalid_argument("field_scan: prime exceeds the scan guard 2^14");
    std::array<Raw, 4> q;
    for (std::size_t k = 0; k < 4; ++k)
        q[k] = to_raw(web.generators()[k]);
    const Polynomial quartic = quartic_surface(web);
    std::array<Polynomial, 4> partials{quartic.derivative(0), quartic.derivative(1), quartic.derivative(2),
                                       quartic.derivative(3)};

    // Work units: (lead index, value of the first free coordinate).
    struct Unit {
        std::size_t lead;
        std::uint64_t first;
    };
    std::vector<Unit> units;
    for (std::size_t lead = 0; lead < 3; ++lead)
        for (std::uint64_t v = 0; v < p; ++v)
            units.push_back({lead, v});
    units.push_back({3, 0});

    auto run = [&](std::size_t begin, std::size_t end) {
        Census c;
        c.prime = static_cast<std::uint32_t>(p);
        std::array<std::uint64_t, 4> t{};
        auto visit = [&]() {
            Raw m{};
            for (std::size_t k = 0; k < 4; ++k) {
                if (t[k] == 0)
                    continue;
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        m[i][j] = (m[i][j] + t[k] * q[k][i][j]) % p;
            }
            const std::size_t r = raw_rank(m, p);
            ++c.by_rank[r];
            if (r == 3) {
                auto g = raw_gradient(m, q, p);
                if (g == std::array<std::uint64_t, 4>{})
                    ++c.rank3_singular;
            } else if (r <= 2) {
                Vector pt;
                for (auto x : t)
                    pt.push_back(Scalar(f, static_cast<long>(x)));
                for (const auto& d : partials)
                    if (!d.evaluate(pt).is_zero()) {
                        ++c.singular_violations;
                        break;
                    }
            }
        };
        for (std::size_t u = begin; u < end; ++u) {
            const Unit& w = units[u];
            t = {};
            t[w.lead] = 1;
            const std::size_t free = 3 - w.lead;
            if (free == 0) {
                visit();
                continue;
            }
            t[w.lead + 1] = w.first;
            std::uint64_t rest = 1;
            for (std::size_t k = 1; k < free; ++k)
                rest *= p;
            for (std::uint64_t idx = 0; idx < rest; ++idx) {
                std::uint64_t x = idx;
                for (std::size_t k = w.lead + 2; k < 4; ++k) {
                    t[k] = x % p;
                    x /= p;
                }
                visit();
            }
        }
        return c;
    };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(units.size()));
    std::vector<std::future<Census>> parts;
    const std::size_t chunk = (units.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < units.size(); b += chunk)
        parts.push_back(std::async(std::launch::async, run, b, std::min(units.size(), b + chunk)));
    Census total;
    total.prime = static_cast<std::uint32_t>(p);
    for (auto& part : parts) {
        Census c = part.get();
        for (std::size_t r = 0; r < 5; ++r)
            total.by_rank[r] += c.by_rank[r];
        total.singular_violations += c.singular_violations;
        total.rank3_singular += c.rank3_singular;
    }
    return total;
}

nlohmann::ordered_json census_rows(const Census& c)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 4; r >= 0; --r)
        if (r > 0 || c.by_rank[0] > 0)
            rows.push_back({{"rank", r}, {"count", c.by_rank[r]}});
    return rows;
}

} // namespace sextic::quadrics
