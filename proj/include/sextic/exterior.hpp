#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sextic/rng.hpp"
#include "sextic/subspace.hpp"

// Exterior algebra of V = F^6 with basis e_0..e_5.
//
// Conventions, inherited by every other module:
//  * grade-k coordinates are indexed by k-subsets of {0..5}, sorted as
//    increasing index tuples in lexicographic order (e_01 < e_02 < ... < e_45);
//  * e_S ^ e_T = sign * e_{S u T}, where sign is the parity of the permutation
//    that merges the sorted tuples S, T into sorted order;
//  * vol extracts the coefficient of e_012345, and the symplectic form on
//    the 20-dimensional space of 3-vectors is omega(a, b) = vol(a ^ b).
namespace sextic::exterior {

inline constexpr std::size_t kDim = 6;
inline constexpr std::size_t kThreeDim = 20;

using Mask = std::uint8_t;

std::size_t grade_size(std::size_t k);
// Subsets of size k as bitmasks, in coordinate order.
const std::vector<Mask>& subsets(std::size_t k);
std::size_t index_of(Mask s);
// +1 or -1: sign of e_S ^ e_T for disjoint S, T.
int merge_sign(Mask s, Mask t);

class ExteriorVector {
public:
    ExteriorVector(std::size_t grade, Vector coords);
    static ExteriorVector zero(const Field& f, std::size_t grade);
    static ExteriorVector basis(const Field& f, Mask s);
    // Grade-1 vector from its six coordinates.
    static ExteriorVector from_v(const Vector& v);

    std::size_t grade() const { return grade_; }
    const Vector& coords() const { return coords_; }
    Field field() const { return coords_.front().field(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const { return ::sextic::is_zero(coords_); }
    ExteriorVector operator+(const ExteriorVector& o) const;
    ExteriorVector operator-(const ExteriorVector& o) const;
    ExteriorVector operator*(const Scalar& c) const;
    bool operator==(const ExteriorVector& o) const { return grade_ == o.grade_ && coords_ == o.coords_; }

private:
    std::size_t grade_;
    Vector coords_;
};

class GradeOverflow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b);
Scalar vol(const ExteriorVector& top);
Scalar symplectic_form(const ExteriorVector& a, const ExteriorVector& b);

// The 20x20 Gram matrix of omega; entries are 0 or +-1.
Matrix gram(const Field& f);

// F_v = { v ^ a : a in /\^2 V }, always 10-dimensional for v != 0.
Subspace F_of(const ExteriorVector& v);
bool is_isotropic(const Subspace& s);
bool is_lagrangian(const Subspace& s);
Subspace perp(const Subspace& s);
// A Lagrangian containing the isotropic s, grown one random vector of perp at a time.
Subspace lagrangian_completion(const Subspace& s, Rng& rng);

// Wedge of a basis of the 3-dimensional w, scaled so its first nonzero coordinate is 1.
ExteriorVector decomposable_of(const Subspace& w);

// Some alpha of grade 2 with v ^ alpha = gamma; gamma must lie in F_v.
ExteriorVector quotient_by(const ExteriorVector& v, const ExteriorVector& gamma);

ExteriorVector random_vector(const Field& f, std::size_t grade, Rng& rng);
// Random Lagrangian: completion of the zero subspace.
Subspace random_lagrangian(const Field& f, Rng& rng);

} // namespace sextic::exterior
