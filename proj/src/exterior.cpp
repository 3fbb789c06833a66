#include "sextic/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace sextic::exterior {

namespace {

struct Tables {
    std::array<std::vector<Mask>, kDim + 1> by_grade;
    std::array<std::size_t, 64> index{};

    Tables()
    {
        // Lexicographic order on sorted tuples; generated by recursion on the first element.
        for (std::size_t k = 0; k <= kDim; ++k) {
            std::vector<Mask> out;
            std::vector<int> tuple;
            auto rec = [&](auto&& self, int start) -> void {
                if (tuple.size() == k) {
                    Mask m = 0;
                    for (int x : tuple)
                        m |= static_cast<Mask>(1u << x);
                    out.push_back(m);
                    return;
                }
                for (int i = start; i < static_cast<int>(kDim); ++i) {
                    tuple.push_back(i);
                    self(self, i + 1);
                    tuple.pop_back();
                }
            };
            rec(rec, 0);
            for (std::size_t i = 0; i < out.size(); ++i)
                index[out[i]] = i;
            by_grade[k] = std::move(out);
        }
    }
};

const Tables& tables()
{
    static const Tables t;
    return t;
}

} // namespace

std::size_t grade_size(std::size_t k)
{
    if (k > kDim)
        throw GradeOverflow("grade " + std::to_string(k) + " exceeds 6");
    return tables().by_grade[k].size();
}

const std::vector<Mask>& subsets(std::size_t k)
{
    if (k > kDim)
        throw GradeOverflow("grade " + std::to_string(k) + " exceeds 6");
    return tables().by_grade[k];
}

std::size_t index_of(Mask s)
{
    return tables().index[s & 63];
}

int merge_sign(Mask s, Mask t)
{
    // Count pairs (i in S, j in T) with i > j.
    int inversions = 0;
    for (int j = 0; j < static_cast<int>(kDim); ++j)
        if (t & (1u << j))
            inversions += std::popcount(static_cast<unsigned>(s) >> (j + 1));
    return inversions % 2 ? -1 : 1;
}

ExteriorVector::ExteriorVector(std::size_t grade, Vector coords) : grade_(grade), coords_(std::move(coords))
{
    if (coords_.size() != grade_size(grade))
        throw std::invalid_argument("exterior vector has wrong coordinate count for its grade");
}

ExteriorVector ExteriorVector::zero(const Field& f, std::size_t grade)
{
    return ExteriorVector(grade, zero_vector(f, grade_size(grade)));
}

ExteriorVector ExteriorVector::basis(const Field& f, Mask s)
{
    std::size_t k = std::popcount(static_cast<unsigned>(s));
    ExteriorVector e = zero(f, k);
    e.coords_[index_of(s)] = Scalar::one(f);
    return e;
}

ExteriorVector ExteriorVector::from_v(const Vector& v)
{
    if (v.size() != kDim)
        throw std::invalid_argument("a vector of V has 6 coordinates");
    return ExteriorVector(1, v);
}

ExteriorVector ExteriorVector::operator+(const ExteriorVector& o) const
{
    if (grade_ != o.grade_)
        throw std::invalid_argument("sum of exterior vectors of different grade");
    Vector c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coords_[i];
    return ExteriorVector(grade_, std::move(c));
}

ExteriorVector ExteriorVector::operator-(const ExteriorVector& o) const
{
    return *this + o * Scalar(field(), -1L);
}

ExteriorVector ExteriorVector::operator*(const Scalar& c) const
{
    return ExteriorVector(grade_, scaled(c, coords_));
}

ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b)
{
    const std::size_t k = a.grade() + b.grade();
    if (k > kDim)
        throw GradeOverflow("wedge of grades " + std::to_string(a.grade()) + " and " + std::to_string(b.grade()));
    ExteriorVector r = ExteriorVector::zero(a.field(), k);
    Vector c = r.coords();
    const auto& sa = subsets(a.grade());
    const auto& sb = subsets(b.grade());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < sb.size(); ++j) {
            if (b[j].is_zero() || (sa[i] & sb[j]))
                continue;
            Scalar t = a[i] * b[j];
            std::size_t idx = index_of(sa[i] | sb[j]);
            if (merge_sign(sa[i], sb[j]) > 0)
                c[idx] += t;
            else
                c[idx] -= t;
        }
    }
    return ExteriorVector(k, std::move(c));
}

Scalar vol(const ExteriorVector& top)
{
    if (top.grade() != kDim)
        throw std::invalid_argument("vol is defined on the top grade only");
    return top[0];
}

Scalar symplectic_form(const ExteriorVector& a, const ExteriorVector& b)
{
    if (a.grade() != 3 || b.grade() != 3)
        throw std::invalid_argument("symplectic form takes two 3-vectors");
    return vol(wedge(a, b));
}

Matrix gram(const Field& f)
{
    Matrix g(f, kThreeDim, kThreeDim);
    const auto& s = subsets(3);
    for (std::size_t i = 0; i < kThreeDim; ++i)
        for (std::size_t j = 0; j < kThreeDim; ++j)
            if ((s[i] | s[j]) == 63)
                g(i, j) = Scalar(f, static_cast<long>(merge_sign(s[i], s[j])));
    return g;
}

Subspace F_of(const ExteriorVector& v)
{
    if (v.grade() != 1)
        throw std::invalid_argument("F_of expects a vector of V");
    if (v.is_zero())
        throw std::invalid_argument("F_of of the zero vector");
    std::vector<Vector> gens;
    for (Mask m : subsets(2))
        gens.push_back(wedge(v, ExteriorVector::basis(v.field(), m)).coords());
    Subspace f = Subspace::span(v.field(), kThreeDim, gens);
    if (f.dim() != 10)
        throw std::logic_error("F_v does not have dimension 10");
    return f;
}

bool is_isotropic(const Subspace& s)
{
    if (s.ambient_dim() != kThreeDim)
        throw std::invalid_argument("expected a subspace of the 3-vectors");
    if (s.dim() == 0)
        return true;
    return (s.basis() * gram(s.field()) * s.basis().transpose()).is_zero();
}

bool is_lagrangian(const Subspace& s)
{
    return s.dim() == 10 && is_isotropic(s);
}

Subspace perp(const Subspace& s)
{
    if (s.ambient_dim() != kThreeDim)
        throw std::invalid_argument("expected a subspace of the 3-vectors");
    if (s.dim() == 0)
        return Subspace::whole(s.field(), kThreeDim);
    Subspace p = kernel_basis(s.basis() * gram(s.field()));
    if (p.dim() != kThreeDim - s.dim())
        throw std::logic_error("symplectic form degenerate");
    return p;
}

Subspace lagrangian_completion(const Subspace& s, Rng& rng)
{
    if (!is_isotropic(s))
        throw std::invalid_argument("lagrangian_completion: input is not isotropic");
    Subspace cur = s;
    const Field f = s.field();
    while (cur.dim() < 10) {
        Subspace p = perp(cur);
        Vector x = zero_vector(f, kThreeDim);
        for (std::size_t i = 0; i < p.dim(); ++i)
            x = axpy(rng.scalar(f), p.basis_vector(i), x);
        if (cur.contains(x))
            continue;
        cur = join(cur, Subspace::span(f, kThreeDim, {x}));
    }
    return cur;
}

ExteriorVector decomposable_of(const Subspace& w)
{
    if (w.ambient_dim() != kDim || w.dim() != 3)
        throw std::invalid_argument("decomposable_of expects a 3-dimensional subspace of V");
    ExteriorVector r = wedge(wedge(ExteriorVector::from_v(w.basis_vector(0)), ExteriorVector::from_v(w.basis_vector(1))),
                             ExteriorVector::from_v(w.basis_vector(2)));
    for (const auto& c : r.coords())
        if (!c.is_zero())
            return r * c.inverse();
    throw std::logic_error("wedge of a basis vanished");
}

ExteriorVector quotient_by(const ExteriorVector& v, const ExteriorVector& gamma)
{
    if (v.grade() != 1 || gamma.grade() != 3)
        throw std::invalid_argument("quotient_by expects a vector and a 3-vector");
    const auto& pairs = subsets(2);
    Matrix m(v.field(), kThreeDim, pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        ExteriorVector col = wedge(v, ExteriorVector::basis(v.field(), pairs[j]));
        for (std::size_t i = 0; i < kThreeDim; ++i)
            m(i, j) = col[i];
    }
    auto x = solve(m, gamma.coords());
    if (!x)
        throw std::invalid_argument("quotient_by: 3-vector is not divisible by v");
    return ExteriorVector(2, std::move(*x));
}

ExteriorVector random_vector(const Field& f, std::size_t grade, Rng& rng)
{
    Vector c;
    for (std::size_t i = 0; i < grade_size(grade); ++i)
        c.push_back(rng.scalar(f));
    return ExteriorVector(grade, std::move(c));
}

Subspace random_lagrangian(const Field& f, Rng& rng)
{
    return lagrangian_completion(Subspace::zero(f, kThreeDim), rng);
}

} // namespace sextic::exterior
