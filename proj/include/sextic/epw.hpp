#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sextic/exterior.hpp"
#include "sextic/polynomial.hpp"

// EPW sextics Y_A = { [v] : F_v meets A } for a Lagrangian A of the 3-vectors.
//
// On the chart c (smallest index with v_c != 0) F_v is framed by v ^ e_i ^ e_j
// with c not in {i, j}. The pairing matrix M(v)_ij = omega(frame_i(v), a_j) is
// linear in v, and det M(v) = v_c^4 times the sextic up to a constant, so on
// v_c = 1 it restricts to lines as a polynomial of degree <= 6.
namespace sextic::epw {

class EpwDatum {
public:
    explicit EpwDatum(Subspace a);

    const Subspace& lagrangian() const { return a_; }
    Field field() const { return a_.field(); }
    // G * A^T, so that a frame row times it gives one row of the pairing matrix.
    const Matrix& paired() const { return paired_; }

private:
    Subspace a_;
    Matrix paired_;
};

// Smallest index with v_c != 0.
std::size_t chart_of(const Vector& v);
// The 10 frame vectors v ^ e_i ^ e_j, c not in {i, j}, as rows.
Matrix chart_frame(const Vector& v, std::size_t c);

std::size_t fiber_intersection_dim(const EpwDatum& a, const Vector& v);
Matrix pairing_matrix(const EpwDatum& a, const Vector& v, std::size_t c);
Scalar chart_det(const EpwDatum& a, const Vector& v, std::size_t c);

// t -> det M(p + t q) with p_c = 1, q_c = 0, from 11 samples; degree <= 6 is enforced.
UniPoly sextic_on_line(const EpwDatum& a, const Vector& p, const Vector& q, std::size_t c);

// Gradient of v -> det M_c(v) at v0; each partial is read off an interpolation along e_k.
Vector gradient_det(const EpwDatum& a, const Vector& v0, std::size_t c);

// Generator v0 ^ alpha of F_v0 meet A together with a grade-2 alpha; requires dimension 1.
struct FiberGenerator {
    exterior::ExteriorVector gamma;
    exterior::ExteriorVector alpha;
};
FiberGenerator fiber_generator(const EpwDatum& a, const Vector& v0);

// Smooth-point predicate: dim(F_v0 meet A) = 1 and v0 ^ alpha ^ alpha != 0.
bool smooth_predicate(const EpwDatum& a, const Vector& v0);

// k -> vol(v0 ^ e_k ^ alpha ^ alpha).
Vector tangent_functional(const EpwDatum& a, const Vector& v0, const exterior::ExteriorVector& alpha);
Vector tangent_functional(const EpwDatum& a, const Vector& v0);

// Some nonzero lambda with x = lambda * y, when both are nonzero and proportional.
std::optional<Scalar> proportionality(const Vector& x, const Vector& y);

// V is modeled as the 2-vectors of U = F^4, coordinates ordered e01 e02 e03 e12 e13 e23.
// ubasis holds four independent rows (coordinates in U).
EpwDatum a_plus(const Matrix& ubasis);
EpwDatum a_minus(const Matrix& ubasis);
// u ^ u' as an element of V.
Vector wedge_in_u(const Vector& u, const Vector& w);
// The 3-space u ^ U of V.
Subspace iota_plus(const Matrix& ubasis, const Vector& coeffs);
// Coefficient of e0123 in v ^ v, halved: v01 v23 - v02 v13 + v03 v12.
Scalar plucker_quadric(const Vector& v);

struct TripleQuadricResult {
    bool holds = true;
    std::size_t trials = 0;
    std::size_t skipped = 0; // pairs with q = 0 resampled
    std::string witness;     // first disagreeing pair
};
TripleQuadricResult verify_triple_quadric(const EpwDatum& a, std::size_t trials, Rng& rng);

bool sigma_membership(const EpwDatum& a, const Subspace& w);

class RetryBudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PointOnY {
    Vector v;
    std::size_t lines_tried = 0;
};
// Roots of the sextic on random chart-0 lines, found by scanning F_p.
PointOnY find_point_on_Y(const EpwDatum& a, Rng& rng, std::size_t budget = 64);

Vector random_point(const Field& f, Rng& rng);

} // namespace sextic::epw
