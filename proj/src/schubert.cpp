#include "sextic/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sextic::schubert {

Partition make_partition(const Grassmannian& g, Partition p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    if (p.size() > g.rows() || (!p.empty() && p.front() > g.cols()))
        throw std::invalid_argument(sigma_name(p) + " does not fit the " + std::to_string(g.rows()) + "x" +
                                    std::to_string(g.cols()) + " box");
    return p;
}

unsigned weight(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0u);
}

Partition complement(const Grassmannian& g, const Partition& p)
{
    Partition q = make_partition(g, p);
    q.resize(g.rows(), 0);
    Partition c(g.rows());
    for (unsigned i = 0; i < g.rows(); ++i)
        c[i] = g.cols() - q[g.rows() - 1 - i];
    return make_partition(g, c);
}

std::vector<Partition> box_partitions(const Grassmannian& g)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(unsigned)> rec = [&](unsigned bound) {
        out.push_back(cur);
        if (cur.size() == g.rows())
            return;
        for (unsigned part = 1; part <= bound; ++part) {
            cur.push_back(part);
            rec(part);
            cur.pop_back();
        }
    };
    rec(g.cols());
    std::sort(out.begin(), out.end());
    return out;
}

std::string sigma_name(const Partition& p)
{
    if (p.empty())
        return "1";
    const bool wide = std::any_of(p.begin(), p.end(), [](unsigned x) { return x > 9; });
    std::string s = "σ";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

SchubertClass SchubertClass::sigma(const Grassmannian& g, const Partition& p, const mpz_class& c)
{
    SchubertClass x(g);
    x.add_term(make_partition(g, p), c);
    return x;
}

mpz_class SchubertClass::coefficient(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SchubertClass::add_term(const Partition& p, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (fresh)
        return;
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

void SchubertClass::check(const SchubertClass& o) const
{
    if (!(g_ == o.g_))
        throw std::invalid_argument("Schubert classes on different Grassmannians");
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o)
{
    check(o);
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

SchubertClass SchubertClass::operator*(const mpz_class& c) const
{
    SchubertClass r(g_);
    for (const auto& [p, x] : terms_)
        r.add_term(p, x * c);
    return r;
}

// Jacobi-Trudi: sigma_mu = det(sigma_{mu_i + j - i}), each factor applied by Pieri.
SchubertClass SchubertClass::operator*(const SchubertClass& o) const
{
    check(o);
    SchubertClass r(g_);
    for (const auto& [mu, c] : o.terms_) {
        const std::size_t l = mu.size();
        std::vector<std::size_t> perm(l);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i + 1; j < l; ++j)
                    if (perm[i] > perm[j])
                        ++inversions;
            SchubertClass t = *this;
            for (std::size_t i = 0; i < l && !t.is_zero(); ++i) {
                long m = static_cast<long>(mu[i]) + static_cast<long>(perm[i]) - static_cast<long>(i);
                if (m < 0)
                    t = SchubertClass(g_);
                else if (m > 0)
                    t = pieri_row(t, static_cast<unsigned>(m));
            }
            r += t * mpz_class(inversions % 2 ? -c : c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return r;
}

SchubertClass SchubertClass::pow(unsigned e) const
{
    SchubertClass r = one(g_);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

int SchubertClass::codim() const
{
    if (terms_.empty())
        return -1;
    const unsigned w = weight(terms_.begin()->first);
    for (const auto& [p, c] : terms_)
        if (weight(p) != w)
            return -1;
    return static_cast<int>(w);
}

std::string SchubertClass::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        mpz_class a = abs(c);
        if (p.empty())
            os << a.get_str();
        else if (a == 1)
            os << sigma_name(p);
        else
            os << a.get_str() << "·" << sigma_name(p);
    }
    return os.str();
}

SchubertClass pieri_row(const SchubertClass& x, unsigned m)
{
    const Grassmannian& g = x.grassmannian();
    SchubertClass r(g);
    for (const auto& [lambda, c] : x.terms()) {
        Partition lam = lambda;
        lam.resize(g.rows(), 0);
        Partition mu(g.rows());
        std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
            if (i == g.rows()) {
                if (left == 0)
                    r.add_term(make_partition(g, mu), c);
                return;
            }
            const unsigned upper = i == 0 ? g.cols() : lam[i - 1];
            for (unsigned v = lam[i]; v <= upper && v - lam[i] <= left; ++v) {
                mu[i] = v;
                rec(i + 1, left - (v - lam[i]));
            }
        };
        rec(0, m);
    }
    return r;
}

SchubertClass pieri_column(const SchubertClass& x, unsigned m)
{
    const Grassmannian& g = x.grassmannian();
    SchubertClass r(g);
    for (const auto& [lambda, c] : x.terms()) {
        Partition lam = lambda;
        lam.resize(g.rows(), 0);
        Partition mu = lam;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
            if (i == g.rows()) {
                if (left == 0)
                    r.add_term(make_partition(g, mu), c);
                return;
            }
            for (unsigned add = 0; add <= 1 && add <= left; ++add) {
                mu[i] = lam[i] + add;
                if (mu[i] > g.cols() || (i > 0 && mu[i] > mu[i - 1]))
                    continue;
                rec(i + 1, left - add);
            }
            mu[i] = lam[i];
        };
        rec(0, m);
    }
    return r;
}

mpz_class integrate(const SchubertClass& x)
{
    const Grassmannian& g = x.grassmannian();
    if (x.is_zero())
        return 0;
    if (x.codim() != static_cast<int>(g.dim()))
        throw std::invalid_argument("integrate needs a class of top codimension");
    return x.coefficient(Partition(g.rows(), g.cols()));
}

namespace {

using BinaryForm = std::map<std::pair<unsigned, unsigned>, mpz_class>; // (deg a, deg b) -> coeff

BinaryForm multiply(const BinaryForm& x, const BinaryForm& y)
{
    BinaryForm r;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y)
            r[{ex.first + ey.first, ex.second + ey.second}] += cx * cy;
    std::erase_if(r, [](const auto& t) { return t.second == 0; });
    return r;
}

// (a + b)^r (a b)^q
BinaryForm elementary_monomial(unsigned r, unsigned q)
{
    BinaryForm out;
    for (unsigned i = 0; i <= r; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), r, i);
        out[{i + q, r - i + q}] = binom;
    }
    return out;
}

} // namespace

std::map<std::pair<unsigned, unsigned>, mpz_class> sym_power_roots_in_elementary(unsigned d)
{
    BinaryForm f{{{0, 0}, 1}};
    for (unsigned i = 0; i <= d; ++i) {
        BinaryForm root;
        if (d - i)
            root[{1, 0}] = d - i;
        if (i)
            root[{0, 1}] = i;
        f = multiply(f, root);
    }
    std::map<std::pair<unsigned, unsigned>, mpz_class> out;
    while (!f.empty()) {
        auto lead = std::prev(f.end()); // largest power of a
        const auto [p, q] = lead->first;
        if (p < q)
            throw std::logic_error("root product is not symmetric");
        const mpz_class c = lead->second;
        out[{p - q, q}] += c;
        for (const auto& [e, x] : elementary_monomial(p - q, q)) {
            f[e] -= c * x;
            if (f[e] == 0)
                f.erase(e);
        }
    }
    return out;
}

SchubertClass sym_power_top_chern(const Grassmannian& g, unsigned d)
{
    if (g.k != 2)
        throw std::invalid_argument("sym_power_top_chern works on Gr(2, n)");
    const SchubertClass e1 = SchubertClass::sigma(g, {1});
    const SchubertClass e2 = g.cols() >= 1 ? SchubertClass::sigma(g, {1, 1}) : SchubertClass(g);
    SchubertClass r(g);
    for (const auto& [pq, c] : sym_power_roots_in_elementary(d))
        r += e1.pow(pq.first) * e2.pow(pq.second) * c;
    return r;
}

SchubertClass sym6_top_chern()
{
    return sym_power_top_chern({2, 6}, 6);
}

} // namespace sextic::schubert
