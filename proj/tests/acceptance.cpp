#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "sextic/bbf.hpp"
#include "sextic/chow.hpp"
#include "sextic/epw.hpp"
#include "sextic/incidence.hpp"
#include "sextic/quadrics.hpp"
#include "sextic/schubert.hpp"
#include "sextic/suites.hpp"

using namespace sextic;
using exterior::ExteriorVector;

namespace {

struct Result {
    bool ok;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_s;
    std::function<Result()> body;
};

const Field fp = Field::prime(10007);
const Field fq = Field::rational();

Vector random_vec(const Field& f, std::size_t n, Rng& rng)
{
    for (;;) {
        Vector v(n);
        for (auto& x : v)
            x = rng.scalar(f);
        if (!is_zero(v))
            return v;
    }
}

Vector combination(const Subspace& s, Rng& rng)
{
    Vector v = zero_vector(s.field(), s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        v = axpy(rng.scalar(s.field()), s.basis_vector(i), v);
    return v;
}

Subspace random_three_plane(Rng& rng)
{
    for (;;) {
        Subspace w = Subspace::span(fp, 6, {random_vec(fp, 6, rng), random_vec(fp, 6, rng), random_vec(fp, 6, rng)});
        if (w.dim() == 3)
            return w;
    }
}

std::string count(std::size_t good, std::size_t total)
{
    return std::to_string(good) + "/" + std::to_string(total);
}

Result fv_lagrangian(Rng& rng)
{
    std::size_t good = 0;
    for (const Field& f : {fq, fp})
        for (int i = 0; i < 100; ++i) {
            Subspace fv = exterior::F_of(ExteriorVector::from_v(random_vec(f, 6, rng)));
            good += fv.dim() == 10 && exterior::is_lagrangian(fv);
        }
    return {good == 200, count(good, 200) + " (100 over Q, 100 over F_10007)"};
}

Result sextic_degrees(Rng& rng)
{
    std::size_t bounded = 0, six = 0;
    for (int i = 0; i < 100; ++i) {
        epw::EpwDatum a(exterior::random_lagrangian(fp, rng));
        Vector p = random_vec(fp, 6, rng), q = random_vec(fp, 6, rng);
        p[0] = Scalar::one(fp);
        q[0] = Scalar::zero(fp);
        if (is_zero(q))
            q[1] = Scalar::one(fp);
        const int d = degree(epw::sextic_on_line(a, p, q, 0));
        bounded += d <= 6;
        six += d == 6;
    }
    return {bounded == 100 && six >= 95, "degree <= 6: " + count(bounded, 100) + ", degree 6: " + count(six, 100)};
}

Result triple_quadric(Rng& rng)
{
    epw::TripleQuadricResult r = epw::verify_triple_quadric(epw::a_plus(Matrix::identity(fp, 4)), 200, rng);
    return {r.holds && r.trials == 200, std::to_string(r.trials) + " pairs, " + (r.holds ? "0 failures" : r.witness)};
}

Result decomposition(Rng&)
{
    const Matrix id = Matrix::identity(fp, 4);
    Subspace p = epw::a_plus(id).lagrangian(), m = epw::a_minus(id).lagrangian();
    const bool ok = p.dim() == 10 && m.dim() == 10 && exterior::is_lagrangian(p) && exterior::is_lagrangian(m) &&
                    meet(p, m).dim() == 0 && join(p, m).dim() == 20;
    return {ok, "dims " + std::to_string(p.dim()) + " + " + std::to_string(m.dim()) + ", sum " +
                    std::to_string(join(p, m).dim())};
}

Result smoothness(Rng& rng)
{
    std::size_t discrepancies = 0, sigma = 0, smooth = 0;
    for (int i = 0; i < 100; ++i) {
        std::optional<epw::EpwDatum> a;
        Vector v;
        if (i % 10 == 9) {
            Subspace w = random_three_plane(rng);
            Subspace line = Subspace::span(fp, 20, {exterior::decomposable_of(w).coords()});
            a.emplace(exterior::lagrangian_completion(line, rng));
            do
                v = combination(w, rng);
            while (is_zero(v));
            ++sigma;
        } else {
            a.emplace(exterior::random_lagrangian(fp, rng));
            v = epw::find_point_on_Y(*a, rng).v;
        }
        const bool grad = !is_zero(epw::gradient_det(*a, v, epw::chart_of(v)));
        const bool pred = epw::smooth_predicate(*a, v);
        smooth += pred;
        discrepancies += grad != pred;
    }
    return {discrepancies == 0, std::to_string(discrepancies) + " discrepancies, " + std::to_string(smooth) +
                                    " smooth, " + std::to_string(sigma) + " points on P(W)"};
}

Result tangent(Rng& rng)
{
    std::size_t found = 0, good = 0, tries = 0;
    while (found < 50 && tries++ < 500) {
        epw::EpwDatum a(exterior::random_lagrangian(fp, rng));
        Vector v = epw::find_point_on_Y(a, rng).v;
        if (!epw::smooth_predicate(a, v))
            continue;
        ++found;
        good += epw::proportionality(epw::gradient_det(a, v, epw::chart_of(v)), epw::tangent_functional(a, v))
                    .has_value();
    }
    return {found == 50 && good == 50, count(good, found) + " proportional"};
}

Result incidence_dims(Rng& rng)
{
    std::size_t sixty_five = 0;
    for (int i = 0; i < 20; ++i) {
        Subspace a = exterior::random_lagrangian(fp, rng);
        Subspace u = incidence::random_hyperplane_through(a, combination(a, rng), rng);
        Subspace b = incidence::pencil_through(u).member(rng.scalar(fp), rng.nonzero_scalar(fp));
        if (b == a || !(meet(a, b) == u)) {
            --i;
            continue;
        }
        sixty_five += incidence::omega_tangent_dim(a, b) == 65;
    }
    std::size_t injective = 0;
    for (int i = 0; i < 50; ++i) {
        Subspace b = exterior::random_lagrangian(fq, rng);
        Subspace u = incidence::random_hyperplane_through(b, combination(b, rng), rng);
        std::vector<Vector> alphas;
        while (alphas.size() < 10) {
            Vector x = combination(b, rng);
            std::vector<Vector> trial = alphas;
            trial.push_back(x);
            if (!u.contains(x) && rank(Matrix::from_rows(fq, 20, trial)) == trial.size())
                alphas = trial;
        }
        injective += incidence::injective_differential_kernel(b, u, alphas) == 0;
    }
    return {sixty_five == 20 && injective == 50,
            "dim 65 on " + count(sixty_five, 20) + ", kernel 0 on " + count(injective, 50)};
}

Result tangency(Rng& rng)
{
    std::size_t good = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        Rng local = Rng::derive(rng.next(), s);
        good += incidence::tangency_scenario(fp, local).all();
    }
    return {good == 100, "(i)-(iv) on " + count(good, 100)};
}

Result harris_tu(Rng&)
{
    const auto a = quadrics::harris_tu_degree(4, 2), b = quadrics::harris_tu_degree(4, 3),
               c = quadrics::harris_tu_degree(3, 1);
    return {a == 10 && b == 4 && c == 4, a.get_str() + ", " + b.get_str() + ", " + c.get_str()};
}

Result bitangents(Rng& rng)
{
    std::size_t polars = 0, swapped = 0;
    for (int i = 0; i < 50; ++i) {
        quadrics::BitangentFixture fx = quadrics::bitangent_fixture(fp, rng);
        const auto& g = fx.web.generators();
        auto p = quadrics::bitangent_pair(fx.web, {g[0], g[1]}, fx.a, fx.b);
        auto q = quadrics::bitangent_pair(fx.web, {g[0], g[1]}, fx.b, fx.a);
        polars += p.status == quadrics::PairStatus::Pair && quadrics::satisfies_polars(fx.web, p.x, p.y);
        swapped += q.status == p.status && q.x == p.x && q.y == p.y;
    }
    return {polars == 50 && swapped == 50, "polars " + count(polars, 50) + ", swap " + count(swapped, 50)};
}

Result degree_table(Rng&)
{
    const chow::VarietyModel x;
    std::ostringstream d;
    for (const auto& [cls, value] : x.degree_table())
        d << (d.tellp() ? ", " : "{") << value;
    d << "}";
    const bool ok = d.str() == "{12, 60, 828, 324, 40, 24, 192}" && chow::thom_porteous_table_identity(x) &&
                    chow::hirzebruch_chi(x) == 3 && mpq_class(828 - 108) / 240 == 3;
    return {ok, d.str() + ", chi = " + chow::hirzebruch_chi(x).get_str()};
}

Result chern_relations(Rng&)
{
    const chow::VarietyModel x;
    const chow::ChernDerivation s = chow::derive_chern_relations(x);
    const chow::FormalClass h = x.h(), Z = x.Z(), c2 = x.c2();
    std::vector<std::pair<std::string, bool>> items = {
        {"c2 h = 5 h^3", s.c2h_relation == c2 * h - h.pow(3) * 5},
        {"c4", s.c4_expression == h.pow(4) * 435 - h * h * Z * 180 + Z * Z * 12},
        {"deg c4", s.c4_degree == 324},
        {"c2(Q)", s.q_from_cotangent_sub.c[2] == Z * -3 && s.q_from_extension.c[2] == Z * -3},
        {"c3(Q)", s.q_from_cotangent_sub.c[3] == h.pow(3) * -70 && s.q_from_extension.c[3] == h * Z * -21},
        {"c(i_* det T_Z)",
         s.c_det_tz.c[2] == Z * -1 && s.c_det_tz.c[3] == h * Z * -9 && s.c_det_tz.c[4] == h * h * Z * -63 + Z * Z},
        {"c(i_* T_Z)", s.c_tz.c[2] == Z * -2 && s.c_tz.c[3] == h * Z * -12 &&
                           s.c_tz.c[4] == h * h * Z * -72 + Z * Z * 9},
    };
    std::string bad;
    for (const auto& [name, ok] : items)
        if (!ok)
            bad += (bad.empty() ? "" : ", ") + name;
    return {bad.empty(), bad.empty() ? "c4 = " + s.c4_expression.to_string() + ", degree " + s.c4_degree.get_str()
                                     : "mismatch: " + bad};
}

Result riemann_roch(Rng&)
{
    const chow::VarietyModel x;
    std::size_t good = 0;
    for (long n = -3; n <= 5; ++n) {
        mpq_class m = n;
        good += chow::hrr_chi(x, x.line_bundle(n)) == m * m * m * m / 2 + 5 * m * m / 2 + 3;
    }
    const mpq_class chi3 = chow::hrr_chi(x, x.line_bundle(3));
    const long odd = bbf::odd_section_count();
    return {good == 9 && chi3 == 66 && odd == 10,
            "polynomial " + count(good, 9) + ", chi(O(3)) = " + chi3.get_str() + ", odd = " + std::to_string(odd)};
}

Result sym6(Rng&)
{
    using namespace schubert;
    const Grassmannian g{2, 6};
    const SchubertClass c = sym6_top_chern();
    // root product prod_a (a x1 + (6-a) x2) against the elementary table
    bool table_ok = true;
    for (long x1 = -2; x1 <= 2; ++x1)
        for (long x2 = -2; x2 <= 2; ++x2) {
            mpz_class prod = 1, from_table = 0;
            for (long a = 0; a <= 6; ++a)
                prod *= a * x1 + (6 - a) * x2;
            for (const auto& [pq, coeff] : sym_power_roots_in_elementary(6)) {
                mpz_class t = coeff;
                for (unsigned i = 0; i < pq.first; ++i)
                    t *= x1 + x2;
                for (unsigned i = 0; i < pq.second; ++i)
                    t *= x1 * x2;
                from_table += t;
            }
            table_ok = table_ok && prod == from_table;
        }
    const mpz_class deg = integrate(SchubertClass::sigma(g, {1}).pow(8));
    const SchubertClass expected = SchubertClass::sigma(g, {4, 3}, 57888);
    return {c == expected && table_ok && deg == 14,
            "expected " + expected.to_string() + ", got " + c.to_string() +
                (table_ok ? ", root oracle agrees" : ", root oracle disagrees") + ", ∫σ1^8 = " + deg.get_str()};
}

Result bbf_checks(Rng&)
{
    const bbf::BBLattice l;
    const auto h = bbf::BBLattice::polarization();
    const long h4 = l.quad_intersection(h, h, h, h);
    const auto sig = l.signature();
    const mpz_class det = l.determinant();
    const bool ok = h4 == 12 && bbf::chi_of_class(-2) == 1 && bbf::verify_deg6(l, h).passed() &&
                    bbf::verify_deg6(l, h).checked == 23 && bbf::verify_deg4_independence(l, h).valid() &&
                    sig == std::pair<std::size_t, std::size_t>{3, 20} && abs(det) == 2;
    return {ok, "h^4 = " + std::to_string(h4) + ", chi(e) = " + bbf::chi_of_class(-2).get_str() + ", signature (" +
                    std::to_string(sig.first) + ", " + std::to_string(sig.second) + "), det = " + det.get_str()};
}

Result determinism(Rng&)
{
    suites::Options o;
    o.seed = 7;
    const std::string a = report::to_json(suites::run("all", o)).dump(2);
    const std::string b = report::to_json(suites::run("all", o)).dump(2);
    return {a == b, a == b ? "identical (" + std::to_string(a.size()) + " bytes)" : "reports differ"};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    std::vector<int> allowed;
    std::uint64_t seed = 0;
    app.add_option("--allow-fail", allowed, "criteria whose failure does not change the exit status");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);
    const std::set<int> allow(allowed.begin(), allowed.end());

    const double instant = 0.1;
    const std::vector<Criterion> criteria = {
        {1, "F_v is Lagrangian of dimension 10", 1, [&] { Rng r = Rng::derive(seed, 1); return fv_lagrangian(r); }},
        {2, "sextic_on_line has degree <= 6, = 6 on >= 95 of 100", 10, [&] { Rng r = Rng::derive(seed, 2); return sextic_degrees(r); }},
        {3, "Y of A_+(U) is the triple quadric on 200 pairs", 10, [&] { Rng r = Rng::derive(seed, 3); return triple_quadric(r); }},
        {4, "A_+ + A_- is all of the third exterior power", 1, [&] { Rng r = Rng::derive(seed, 4); return decomposition(r); }},
        {5, "gradient test and smoothness predicate agree at 100 points", 30, [&] { Rng r = Rng::derive(seed, 5); return smoothness(r); }},
        {6, "tangent functional is proportional to the gradient", 30, [&] { Rng r = Rng::derive(seed, 6); return tangent(r); }},
        {7, "incidence tangent dim 65, injective differential over Q", 30, [&] { Rng r = Rng::derive(seed, 7); return incidence_dims(r); }},
        {8, "tangency scenario (i)-(iv) on 100 seeds", 60, [&] { Rng r = Rng::derive(seed, 8); return tangency(r); }},
        {9, "symmetric determinantal degrees 10, 4, 4", instant, [&] { Rng r(seed); return harris_tu(r); }},
        {10, "bitangent pairs satisfy the polars, swap symmetric", 5, [&] { Rng r = Rng::derive(seed, 10); return bitangents(r); }},
        {11, "degree table identities and chi = 3", instant, [&] { Rng r(seed); return degree_table(r); }},
        {12, "derived Chern class relations", 1, [&] { Rng r(seed); return chern_relations(r); }},
        {13, "Riemann-Roch polynomial, chi(O(3)) = 66, 10 odd sections", instant, [&] { Rng r(seed); return riemann_roch(r); }},
        {14, "top Chern class of Sym^6 is 57888 σ43, ∫σ1^8 = 14", instant, [&] { Rng r(seed); return sym6(r); }},
        {15, "lattice: h^4 = 12, chi(e) = 1, degree relations, (3,20), |det| = 2", instant, [&] { Rng r(seed); return bbf_checks(r); }},
        {16, "run all --seed 7 twice gives identical JSON", 180, [&] { Rng r(seed); return determinism(r); }},
    };

    bool blocking_failure = false;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.body();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = s < c.limit_s;
        const bool pass = r.ok && in_time;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s < %g s", s, c.limit_s);
        std::cout << "[" << (c.number < 10 ? "0" : "") << c.number << "] " << (pass ? "PASS" : "FAIL") << "  "
                  << c.title << ": " << r.detail << " (" << timing << (in_time ? "" : " exceeded") << ")"
                  << (!pass && allow.count(c.number) ? " [allowed]" : "") << "\n";
        if (!pass && !allow.count(c.number))
            blocking_failure = true;
    }
    return blocking_failure ? 1 : 0;
}
