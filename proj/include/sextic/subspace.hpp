#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sextic/matrix.hpp"

namespace sextic {

// A linear subspace of F^n stored by its reduced row echelon basis, so that
// two subspaces are equal exactly when their basis matrices are identical.
class Subspace {
public:
    static Subspace span(const Matrix& generators);
    static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& generators);
    static Subspace zero(const Field& f, std::size_t ambient);
    static Subspace whole(const Field& f, std::size_t ambient);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const Field& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& s) const;
    // Coordinates of v in the canonical basis; v must lie in the subspace.
    Vector coordinates(const Vector& v) const;
    // {y : <b, y> = 0 for every basis vector b} under the standard dot product.
    Subspace annihilator() const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    Vector residual(const Vector& v) const;

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Right kernel {x : m x = 0}; dim = cols - rank(m).
Subspace kernel_basis(const Matrix& m);

// Some x with m x = b, or nothing when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Both check the Grassmann identity dim(meet) + dim(join) = dim(a) + dim(b).
Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);

} // namespace sextic
