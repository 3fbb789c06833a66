#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sextic/rng.hpp"

// The lattice U^3 + E8(-1)^2 + <-2> with Fujiki constant 3.
namespace sextic::bbf {

using LatticeVector = std::vector<long>;

inline constexpr std::size_t kRank = 23;
inline constexpr long kFujiki = 3;
// q^v . a . b = 25 q(a, b) and q^v = (5/6) c2, so c2 . a . b = 30 q(a, b).
inline constexpr long kQDualScale = 25;
inline const mpq_class kC2OverQDual{6, 5};

class BBLattice {
public:
    BBLattice();

    const std::vector<std::vector<long>>& gram() const { return gram_; }
    long q(const LatticeVector& a, const LatticeVector& b) const;
    long q(const LatticeVector& a) const { return q(a, a); }

    // Polarized Fujiki relation, int a^4 = 3 q(a, a)^2.
    long quad_intersection(const LatticeVector& a1, const LatticeVector& a2, const LatticeVector& a3,
                           const LatticeVector& a4) const;
    // c2 . a . b
    mpq_class c2_pairing(const LatticeVector& a, const LatticeVector& b) const;

    mpz_class determinant() const;
    // (positive, negative) inertia indices.
    std::pair<std::size_t, std::size_t> signature() const;

    static LatticeVector basis(std::size_t i);
    // h = e_0 + e_1 in the first U, so q(h, h) = 2.
    static LatticeVector polarization();
    // e_0, isotropic with q(h, e_0) = 1.
    static LatticeVector isotropic();
    // Generator of <-2>.
    static LatticeVector minus_two();
    LatticeVector random_vector(Rng& rng, long bound = 5) const;

private:
    std::vector<std::vector<long>> gram_;
};

struct Deg6Report {
    std::size_t checked = 0;
    std::size_t failures = 0;
    bool passed() const { return checked > 0 && failures == 0; }
};
// 5 h^3 . b = c2 . h . b for every basis vector b.
Deg6Report verify_deg6(const BBLattice& l, const LatticeVector& h);

struct Deg4Witness {
    LatticeVector alpha;
    long q_alpha = 0, q_h_alpha = 0;
    long h2_form = 0;      // h^2 . alpha^2
    mpq_class qdual_form;  // q^v . alpha^2
    long h2_on_h = 0;      // h^4
    mpq_class qdual_on_h;  // q^v . h^2
    bool valid() const { return q_alpha == 0 && q_h_alpha != 0 && h2_form != 0 && qdual_form == 0; }
};
Deg4Witness verify_deg4_independence(const BBLattice& l, const LatticeVector& h,
                                     const LatticeVector& alpha = BBLattice::isotropic());

// q^2/8 + 5q/4 + 3; q must be even.
mpq_class chi_of_class(long q);
// chi via e^4/24 + c2 e^2/24 + 3 with the Fujiki and c2 constants.
mpq_class chi_from_fujiki(const BBLattice& l, const LatticeVector& e);

// chi(O(3)) minus the invariant cubics C(8, 3).
long odd_section_count();

} // namespace sextic::bbf
