#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

// Schubert calculus on Gr(k, n): classes sigma_lambda for partitions in the
// k x (n - k) box, products through the Pieri rules.
namespace sextic::schubert {

struct Grassmannian {
    unsigned k, n;

    unsigned rows() const { return k; }
    unsigned cols() const { return n - k; }
    unsigned dim() const { return k * (n - k); }
    bool operator==(const Grassmannian&) const = default;
};

// Weakly decreasing, zeros trimmed.
using Partition = std::vector<unsigned>;

// Throws std::invalid_argument unless p fits the box.
Partition make_partition(const Grassmannian& g, Partition p);
unsigned weight(const Partition& p);
Partition complement(const Grassmannian& g, const Partition& p);
std::vector<Partition> box_partitions(const Grassmannian& g);

class SchubertClass {
public:
    explicit SchubertClass(Grassmannian g) : g_(g) {}
    static SchubertClass sigma(const Grassmannian& g, const Partition& p, const mpz_class& c = 1);
    static SchubertClass one(const Grassmannian& g) { return sigma(g, {}); }

    const Grassmannian& grassmannian() const { return g_; }
    const std::map<Partition, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(const Partition& p) const;
    void add_term(const Partition& p, const mpz_class& c);

    SchubertClass& operator+=(const SchubertClass& o);
    friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
    SchubertClass operator*(const mpz_class& c) const;
    SchubertClass operator*(const SchubertClass& o) const;
    SchubertClass pow(unsigned e) const;

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SchubertClass& o) const { return g_ == o.g_ && terms_ == o.terms_; }
    // Codimension if homogeneous, -1 otherwise (and for zero).
    int codim() const;

    // "57888·σ43 + σ44"
    std::string to_string() const;

private:
    void check(const SchubertClass& o) const;

    Grassmannian g_;
    std::map<Partition, mpz_class> terms_;
};

std::string sigma_name(const Partition& p);

// x * sigma_m (horizontal strips).
SchubertClass pieri_row(const SchubertClass& x, unsigned m);
// x * sigma_{1^m} (vertical strips).
SchubertClass pieri_column(const SchubertClass& x, unsigned m);

// Coefficient of the point class; x must have codimension dim(G).
mpz_class integrate(const SchubertClass& x);

// Elementary-symmetric expansion of prod_{i=0}^{d} ((d - i) a + i b):
// (p, q) -> coefficient of e1^p e2^q.
std::map<std::pair<unsigned, unsigned>, mpz_class> sym_power_roots_in_elementary(unsigned d);

// c_{d+1}(Sym^d S^v) on Gr(2, n), with e1 -> sigma_1, e2 -> sigma_{1,1}.
SchubertClass sym_power_top_chern(const Grassmannian& g, unsigned d);
SchubertClass sym6_top_chern();

} // namespace sextic::schubert
