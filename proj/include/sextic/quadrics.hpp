#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sextic/polynomial.hpp"
#include "sextic/rng.hpp"
#include "sextic/subspace.hpp"

// Webs of quadrics in P^3: four symmetric 4x4 matrices Q_0..Q_3 with members
// Q(t) = sum t_i Q_i.
namespace sextic::quadrics {

class WebOfQuadrics {
public:
    explicit WebOfQuadrics(std::array<Matrix, 4> q);

    const std::array<Matrix, 4>& generators() const { return q_; }
    const Field& field() const { return q_[0].field(); }
    Matrix member(const Vector& t) const;

    static WebOfQuadrics diagonal(const Field& f);
    static WebOfQuadrics random(const Field& f, Rng& rng);

private:
    std::array<Matrix, 4> q_;
};

Matrix random_symmetric(const Field& f, std::size_t n, Rng& rng);

std::size_t member_rank(const WebOfQuadrics& web, const Vector& t);

// det Q(t) expanded in t_0..t_3.
Polynomial quartic_surface(const WebOfQuadrics& web);
// d/dt_i det Q(t) = trace(adj(Q(t)) Q_i).
Vector jacobi_gradient(const WebOfQuadrics& web, const Vector& t);

// Degree of the locus of symmetric n x n forms of rank <= r.
mpz_class harris_tu_degree(unsigned n, unsigned r);

enum class PairStatus { Pair, Tangent, Irrational };
std::string to_string(PairStatus s);

struct BitangentPair {
    PairStatus status;
    Vector x, y; // normalized, x <= y; empty when irrational
};

// Points x, y of the line through a, b with q(x, y) = 0 for every member of the
// web. The two members in `pencil` must vanish on the line.
BitangentPair bitangent_pair(const WebOfQuadrics& web, const std::array<Matrix, 2>& pencil, const Vector& a,
                             const Vector& b);

// x^T Q_i y = 0 for all four generators.
bool satisfies_polars(const WebOfQuadrics& web, const Vector& x, const Vector& y);

// A web whose first two generators contain the line t2 = t3 = 0 and whose
// residual members vanish on the planted pair (x, y) of that line.
struct BitangentFixture {
    WebOfQuadrics web;
    Vector a, b; // spanning the line
    Vector x, y; // planted pair
};
BitangentFixture bitangent_fixture(const Field& f, Rng& rng, bool double_point = false);

// Rank of the k x 10 matrix of degree-2 monomials of the points.
std::size_t veronese_independence(const std::vector<Vector>& points);
Vector veronese(const Vector& point);

struct Census {
    std::uint32_t prime = 0;
    std::array<std::uint64_t, 5> by_rank{}; // index = rank
    std::uint64_t singular_violations = 0;  // rank <= 2 with nonzero gradient
    std::uint64_t rank3_singular = 0;       // rank 3 with zero gradient
};

inline constexpr std::uint32_t kScanGuard = 1u << 14;

// Every point of P^3(F_p), p the web's characteristic.
Census field_scan(const WebOfQuadrics& web, unsigned workers = 0);
nlohmann::ordered_json census_rows(const Census& c);

// Normalized representative: first nonzero coordinate 1.
Vector normalize_projective(const Vector& v);
Vector normalize_projective_or_zero(const Vector& v);

} // namespace sextic::quadrics
