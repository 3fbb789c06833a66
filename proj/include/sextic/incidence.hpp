#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sextic/exterior.hpp"

// Tangent spaces to the Lagrangian Grassmannian are Sym^2 of the dual. A form
// on a subspace with canonical basis b_1..b_m is stored by its coefficients
// c_ij (i <= j, lexicographic) with q(x) = sum c_ij x_i x_j on coordinates x.
namespace sextic::incidence {

std::size_t sym2_dim(std::size_t m);
// Row r with q(x) = r . c for every coefficient vector c.
Vector sym2_evaluation_row(const Vector& x);
// Rows expressing q|_u = 0 for the subspace u of base, one per pair k <= l.
Matrix restriction_conditions(const Subspace& base, const Subspace& u);

struct QuadraticFormOn {
    Subspace base;
    Matrix symmetric; // x^T S x = q(x)

    Scalar operator()(const Vector& ambient_vector) const;
};
QuadraticFormOn form_from_coefficients(const Subspace& base, const Vector& c);

struct LagrangianPencil {
    Subspace core;
    Vector x0, x1; // member(t:s) = core + span{t x0 + s x1}
    Subspace member(const Scalar& t, const Scalar& s) const;
    Subspace a0() const;
    Subspace a1() const;
};

LagrangianPencil pencil_through(const Subspace& u);
// A Lagrangian containing the core and inside its perp, i.e. a pencil member.
bool is_member(const LagrangianPencil& pencil, const Subspace& a);

// Dimension of {(q_A, q_B) : q_A|_U = q_B|_U}, U = A meet B; without the
// agreement condition the count is just 2 * 55.
std::size_t omega_tangent_dim(const Subspace& a, const Subspace& b, bool agreement = true);

// dim {q in Sym^2(B^v) : q|_u = 0, q(alpha_i) = 0}. Refuses dependent alphas and alphas in u.
std::size_t injective_differential_kernel(const Subspace& b, const Subspace& u, const std::vector<Vector>& alphas);
// Same count without the hypotheses on the alphas (only membership in B is required).
std::size_t injective_differential_kernel_relaxed(const Subspace& b, const Subspace& u,
                                                  const std::vector<Vector>& alphas);

bool perp_sum_identity(const Subspace& a, const Subspace& b);

struct TangencyReport {
    bool common_intersection = false; // F_v meet A = F_v meet B
    bool intersection_sum = false;    // dim F_v meet (A + B) = 2
    bool pencil_member = false;       // A_v Lagrangian member of the pencil
    bool second_stratum = false;      // dim F_v meet A_v >= 2
    std::size_t attempts = 0;
    std::string witness;

    bool all() const { return common_intersection && intersection_sum && pencil_member && second_stratum; }
};
TangencyReport tangency_scenario(const Field& f, Rng& rng, std::size_t budget = 16);

struct SigmaTangent {
    Subspace forms;                 // solutions inside Sym^2, coefficient coordinates
    std::size_t condition_rank = 0; // rank of the evaluation conditions
};
SigmaTangent sigma_tangent_space(const Subspace& a, const std::vector<Vector>& alphas);

// Random hyperplane of s containing the vector x of s.
Subspace random_hyperplane_through(const Subspace& s, const Vector& x, Rng& rng);

} // namespace sextic::incidence
