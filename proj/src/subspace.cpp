#include "sextic/subspace.hpp"

#include <optional>
#include <stdexcept>

namespace sextic {

Subspace Subspace::span(const Matrix& generators)
{
    Echelon e = rref(generators);
    return Subspace(std::move(e.reduced), std::move(e.pivots));
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& generators)
{
    return span(Matrix::from_rows(f, ambient, generators));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient)
{
    return Subspace(Matrix(f, 0, ambient), {});
}

Subspace Subspace::whole(const Field& f, std::size_t ambient)
{
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        piv[i] = i;
    return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Vector Subspace::residual(const Vector& v) const
{
    if (v.size() != ambient_dim())
        throw std::invalid_argument("subspace membership: ambient mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = r[pivots_[i]];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!basis_(i, j).is_zero())
                r[j] -= c * basis_(i, j);
    }
    return r;
}

bool Subspace::contains(const Vector& v) const
{
    return is_zero(residual(v));
}

bool Subspace::contains(const Subspace& s) const
{
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!contains(s.basis_vector(i)))
            return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    if (!contains(v))
        throw std::invalid_argument("coordinates: vector not in subspace");
    Vector c;
    c.reserve(dim());
    for (auto p : pivots_)
        c.push_back(v[p]);
    return c;
}

Subspace Subspace::annihilator() const
{
    if (dim() == 0)
        return whole(field(), ambient_dim());
    return kernel_basis(basis_);
}

Subspace kernel_basis(const Matrix& m)
{
    const Field& f = m.field();
    const std::size_t n = m.cols();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(f, n);
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, free);
        gens.push_back(std::move(v));
    }
    Subspace k = Subspace::span(f, n, gens);
    if (k.dim() + rank(m) != n)
        throw std::logic_error("kernel_basis: rank-nullity violated");
    return k;
}

namespace {

void check_compatible(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    if (a.field() != b.field())
        throw FieldMismatch(a.field(), b.field());
}

} // namespace

Subspace join(const Subspace& a, const Subspace& b)
{
    check_compatible(a, b);
    Subspace j = Subspace::span(Matrix::vstack(a.basis(), b.basis()));
    if (j.dim() > a.dim() + b.dim() || j.dim() < a.dim() || j.dim() < b.dim())
        throw std::logic_error("join: dimension out of range");
    return j;
}

Subspace meet(const Subspace& a, const Subspace& b)
{
    check_compatible(a, b);
    Subspace ann_a = a.annihilator();
    Subspace ann_b = b.annihilator();
    Subspace m = kernel_basis(Matrix::vstack(ann_a.basis(), ann_b.basis()));
    std::size_t join_dim = rank(Matrix::vstack(a.basis(), b.basis()));
    if (m.dim() + join_dim != a.dim() + b.dim())
        throw std::logic_error("meet: Grassmann identity violated");
    return m;
}


std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(aug);
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

} // namespace sextic
