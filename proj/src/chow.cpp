#include "sextic/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sextic/polynomial.hpp"

namespace sextic::chow {

SymbolTable::SymbolTable(std::vector<Symbol> symbols, int dim) : symbols_(std::move(symbols)), dim_(dim)
{
    for (const auto& s : symbols_)
        if (s.codim <= 0)
            throw std::invalid_argument("symbol " + s.name + " needs positive codimension");
}

std::size_t SymbolTable::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return i;
    throw std::invalid_argument("unknown symbol " + name);
}

FormalClass FormalClass::constant(TablePtr table, const mpq_class& c)
{
    FormalClass x(table);
    x.add_term(Monomial(table->size(), 0), c);
    return x;
}

FormalClass FormalClass::symbol(TablePtr table, const std::string& name)
{
    FormalClass x(table);
    Monomial m(table->size(), 0);
    m[table->index_of(name)] = 1;
    x.add_term(m, 1);
    return x;
}

int FormalClass::codim_of(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * (*table_)[i].codim;
    return d;
}

void FormalClass::add_term(const Monomial& m, const mpq_class& c)
{
    if (m.size() != table_->size())
        throw std::invalid_argument("monomial length does not match the symbol table");
    if (c == 0 || codim_of(m) > table_->dim())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

mpq_class FormalClass::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void FormalClass::check(const FormalClass& o) const
{
    if (table_ != o.table_)
        throw std::invalid_argument("classes live over different symbol tables");
}

FormalClass& FormalClass::operator+=(const FormalClass& o)
{
    check(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

FormalClass& FormalClass::operator-=(const FormalClass& o)
{
    check(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

FormalClass FormalClass::operator-() const
{
    return *this * mpq_class(-1);
}

FormalClass FormalClass::operator*(const FormalClass& o) const
{
    check(o);
    FormalClass r(table_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    return r;
}

FormalClass FormalClass::operator*(const mpq_class& c) const
{
    FormalClass r(table_);
    for (const auto& [m, x] : terms_)
        r.add_term(m, x * c);
    return r;
}

FormalClass operator*(const mpq_class& c, const FormalClass& x)
{
    return x * c;
}

FormalClass FormalClass::pow(unsigned e) const
{
    FormalClass r = constant(table_, 1);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

FormalClass FormalClass::part(int k) const
{
    FormalClass r(table_);
    for (const auto& [m, c] : terms_)
        if (codim_of(m) == k)
            r.add_term(m, c);
    return r;
}

bool FormalClass::is_pure(int k) const
{
    for (const auto& [m, c] : terms_)
        if (codim_of(m) != k)
            return false;
    return true;
}

bool FormalClass::operator==(const FormalClass& o) const
{
    return table_ == o.table_ && terms_ == o.terms_;
}

FormalClass FormalClass::substitute(const std::string& name, const FormalClass& replacement) const
{
    const std::size_t idx = table_->index_of(name);
    if (!replacement.is_pure((*table_)[idx].codim))
        throw std::invalid_argument("substitution for " + name + " must have codimension " +
                                    std::to_string((*table_)[idx].codim));
    FormalClass r(table_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[idx] = 0;
        FormalClass t(table_);
        t.add_term(rest, c);
        r += t * replacement.pow(m[idx]);
    }
    return r;
}

std::string FormalClass::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, mpq_class>> ordered;
    for (int k = 0; k <= table_->dim(); ++k)
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            if (codim_of(it->first) == k)
                ordered.emplace_back(it->first, it->second);
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        mpq_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool constant = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
        bool need_space = false;
        if (a != 1 || constant) {
            os << a.get_str();
            need_space = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i])
                continue;
            if (need_space)
                os << ' ';
            os << (*table_)[i].name;
            if (m[i] > 1)
                os << '^' << static_cast<int>(m[i]);
            need_space = true;
        }
    }
    return os.str();
}

BundleClass BundleClass::trivial(TablePtr table, const mpq_class& rank)
{
    return from_total(rank, FormalClass::constant(std::move(table), 1));
}

BundleClass BundleClass::from_total(const mpq_class& rank, const FormalClass& total)
{
    if (total.part(0) != FormalClass::constant(total.table(), 1))
        throw std::invalid_argument("a total Chern class starts with 1");
    BundleClass b{rank, {}};
    for (int k = 0; k <= total.table()->dim(); ++k)
        b.c.push_back(total.part(k));
    return b;
}

FormalClass BundleClass::total() const
{
    FormalClass t = c.at(0);
    for (std::size_t k = 1; k < c.size(); ++k)
        t += c[k];
    return t;
}

namespace {

mpq_class factorial(int k)
{
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return mpq_class(f);
}

FormalClass component(const BundleClass& b, std::size_t k)
{
    return k < b.c.size() ? b.c[k] : FormalClass(b.c.at(0).table());
}

} // namespace

ChernCharacter ch_from_c(const BundleClass& b)
{
    const TablePtr& t = b.c.at(0).table();
    const int n = t->dim();
    // Newton: p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
    std::vector<FormalClass> p(n + 1, FormalClass(t));
    ChernCharacter ch{FormalClass::constant(t, b.rank)};
    for (int k = 1; k <= n; ++k) {
        FormalClass pk = component(b, k) * mpq_class((k % 2 ? 1 : -1) * k);
        for (int i = 1; i < k; ++i)
            pk += component(b, i) * p[k - i] * mpq_class(i % 2 ? 1 : -1);
        p[k] = pk;
        ch.push_back(pk * (1 / factorial(k)));
    }
    return ch;
}

BundleClass c_from_ch(const ChernCharacter& ch)
{
    const TablePtr& t = ch.at(0).table();
    if (!ch[0].is_pure(0))
        throw std::invalid_argument("ch_0 must be a constant");
    const int n = t->dim();
    std::vector<FormalClass> p(n + 1, FormalClass(t));
    for (int k = 1; k <= n; ++k)
        p[k] = (k < static_cast<int>(ch.size()) ? ch[k] : FormalClass(t)) * factorial(k);
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
    std::vector<FormalClass> e{FormalClass::constant(t, 1)};
    for (int k = 1; k <= n; ++k) {
        FormalClass s(t);
        for (int i = 1; i <= k; ++i)
            s += e[k - i] * p[i] * mpq_class(i % 2 ? 1 : -1);
        e.push_back(s * mpq_class(1, k));
    }
    BundleClass b{ch[0].coefficient(Monomial(t->size(), 0)), e};
    return b;
}

FormalClass ch_total(const ChernCharacter& ch)
{
    FormalClass t = ch.at(0);
    for (std::size_t k = 1; k < ch.size(); ++k)
        t += ch[k];
    return t;
}

ChernCharacter ch_components(const FormalClass& total)
{
    ChernCharacter ch;
    for (int k = 0; k <= total.table()->dim(); ++k)
        ch.push_back(total.part(k));
    return ch;
}

FormalClass todd_from_c(const BundleClass& b)
{
    const TablePtr& t = b.c.at(0).table();
    FormalClass c1 = component(b, 1), c2 = component(b, 2), c3 = component(b, 3), c4 = component(b, 4);
    FormalClass td = FormalClass::constant(t, 1);
    td += c1 * mpq_class(1, 2);
    td += (c1 * c1 + c2) * mpq_class(1, 12);
    td += c1 * c2 * mpq_class(1, 24);
    td += (-(c1.pow(4)) + c1 * c1 * c2 * mpq_class(4) + c1 * c3 + c2 * c2 * mpq_class(3) - c4) * mpq_class(1, 720);
    return td;
}

FormalClass series_inverse(const FormalClass& x)
{
    const TablePtr& t = x.table();
    FormalClass one = FormalClass::constant(t, 1);
    if (x.part(0) != one)
        throw std::invalid_argument("series_inverse needs constant term 1");
    FormalClass y = x - one;
    FormalClass r = one, term = one;
    for (int k = 1; k <= t->dim(); ++k) {
        term = -(term * y);
        r += term;
    }
    return r;
}

VarietyModel::VarietyModel()
    : table_(std::make_shared<SymbolTable>(std::vector<Symbol>{{"h", 1}, {"c2", 2}, {"c4", 4}, {"Z", 2}}, 4))
{
    const FormalClass H = h(), C2 = c2(), C4 = c4(), Zc = Z();
    table_entries_ = {{H.pow(4), 12}, {H * H * C2, 60}, {C2 * C2, 828}, {C4, 324},
                      {H * H * Zc, 40}, {C2 * Zc, 24}, {Zc * Zc, 192}};
}

BundleClass VarietyModel::tangent() const
{
    return BundleClass::from_total(4, one() + c2() + c4());
}

BundleClass VarietyModel::line_bundle(const mpq_class& n) const
{
    return BundleClass::from_total(1, one() + h() * n);
}

mpq_class VarietyModel::degree(const FormalClass& x) const
{
    if (x.table() != table_)
        throw std::invalid_argument("degree: class from another symbol table");
    if (!x.is_pure(4))
        throw std::invalid_argument("degree needs a class of pure codimension 4, got " + x.to_string());
    mpq_class d = 0;
    for (const auto& [m, c] : x.terms()) {
        auto it = std::find_if(table_entries_.begin(), table_entries_.end(),
                               [&](const auto& e) { return e.first.terms().begin()->first == m; });
        if (it == table_entries_.end())
            throw std::invalid_argument("degree table has no entry for this monomial");
        d += c * it->second;
    }
    return d;
}

bool thom_porteous_table_identity(const VarietyModel& x)
{
    for (const auto& m : {x.h() * x.h(), x.c2(), x.Z()}) {
        mpq_class lhs = 3 * x.degree(x.Z() * m);
        mpq_class rhs = 15 * x.degree(x.h() * x.h() * m) - x.degree(x.c2() * m);
        if (lhs != rhs)
            return false;
    }
    return true;
}

mpq_class hirzebruch_chi(const VarietyModel& x)
{
    return x.degree((x.c2() * x.c2() - x.c4() * mpq_class(1, 3)) * mpq_class(1, 240));
}

mpq_class hrr_chi(const VarietyModel& x, const BundleClass& b)
{
    return x.degree((ch_total(ch_from_c(b)) * todd_from_c(x.tangent())).part(4));
}

FormalClass chern_quotient(const BundleClass& e, const BundleClass& f)
{
    return e.total() * series_inverse(f.total());
}

FormalClass chern_difference(const BundleClass& e, const BundleClass& f)
{
    return chern_quotient(e, f).part(2);
}

BundleClass whitney_solve(const std::vector<SequenceSlot>& sequence)
{
    std::size_t unknowns = 0, unknown_at = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i)
        if (sequence[i].unknown) {
            ++unknowns;
            unknown_at = i;
        }
    if (unknowns != 1)
        throw std::invalid_argument("whitney_solve needs exactly one unknown slot");
    TablePtr t;
    for (const auto& s : sequence)
        if (!s.unknown) {
            t = s.bundle.c.at(0).table();
            break;
        }
    if (!t)
        throw std::invalid_argument("whitney_solve needs at least one known slot");

    FormalClass known = FormalClass::constant(t, 1);
    mpq_class rank_sum = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i].unknown)
            continue;
        const BundleClass& b = sequence[i].bundle;
        if (b.c.at(0).table() != t)
            throw std::invalid_argument("whitney_solve: slots over different symbol tables");
        const bool even = i % 2 == 0;
        known = known * (even ? b.total() : series_inverse(b.total()));
        rank_sum += even ? b.rank : -b.rank;
    }
    // c(U)^s * known = 1, s = +-1.
    const bool even = unknown_at % 2 == 0;
    FormalClass total = even ? series_inverse(known) : known;
    mpq_class rank = even ? -rank_sum : rank_sum;
    return BundleClass::from_total(rank, total);
}

EmbeddingModel::EmbeddingModel(const VarietyModel& x)
    : x_(x), s_(std::make_shared<SymbolTable>(std::vector<Symbol>{{"hZ", 1}, {"c2Z", 2}}, 2))
{
}

BundleClass EmbeddingModel::tangent_of_surface() const
{
    return BundleClass::from_total(2, one() - hZ() * mpq_class(3) + c2Z());
}

BundleClass EmbeddingModel::normal_bundle() const
{
    return BundleClass::from_total(2, one() + hZ() * mpq_class(3) + c2Z());
}

FormalClass EmbeddingModel::push(const FormalClass& y) const
{
    if (y.table() != s_)
        throw std::invalid_argument("push expects a class on the surface");
    FormalClass r(x_.table());
    for (const auto& [m, c] : y.terms()) {
        const unsigned a = m[0], b = m[1];
        FormalClass image(x_.table());
        if (b == 0)
            image = x_.h().pow(a) * x_.Z();
        else if (a == 0 && b == 1)
            image = x_.Z() * x_.Z();
        else
            throw std::invalid_argument("push: unknown surface monomial");
        r += image * c;
    }
    return r;
}

FormalClass grr_push(const EmbeddingModel& emb, const ChernCharacter& sheaf)
{
    FormalClass ch = ch_total(sheaf);
    if (ch.table() != emb.surface())
        throw std::invalid_argument("grr_push expects a Chern character on the surface");
    return emb.push(ch * series_inverse(todd_from_c(emb.normal_bundle())));
}

nlohmann::ordered_json to_json(const Relation& r)
{
    return {{"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}, {"degreeCheck", r.degree_check}};
}

namespace {

std::string degree_pair(const mpq_class& a, const mpq_class& b)
{
    return a.get_str() + " = " + b.get_str();
}

} // namespace

ChernDerivation derive_chern_relations(const VarietyModel& x)
{
    const FormalClass h = x.h(), c2 = x.c2(), c4 = x.c4(), Z = x.Z(), one = x.one();
    // 15 h^2 - c2 = 3 Z.
    const FormalClass c2_from_z = h * h * mpq_class(15) - Z * mpq_class(3);
    const FormalClass z_from_c2 = (h * h * mpq_class(15) - c2) * mpq_class(1, 3);

    // 0 -> O(-6) -> f^* Omega_P5 -> Omega_X -> Q -> 0.
    BundleClass o_minus6 = x.line_bundle(-6);
    BundleClass omega_p5 = BundleClass::from_total(5, (one - h).pow(6));
    BundleClass omega_x = BundleClass::from_total(4, one + c2 + c4);
    BundleClass q_raw = whitney_solve({{false, o_minus6}, {false, omega_p5}, {false, omega_x}, {true, {}}});
    BundleClass q_sub = BundleClass::from_total(q_raw.rank, q_raw.total().substitute("c2", c2_from_z));

    EmbeddingModel emb(x);
    BundleClass tz = emb.tangent_of_surface();
    BundleClass det_tz = BundleClass::from_total(1, emb.one() + tz.c[1]);
    FormalClass ch_det_tz = grr_push(emb, ch_from_c(det_tz));
    FormalClass ch_tz = grr_push(emb, ch_from_c(tz));
    BundleClass c_det_tz = c_from_ch(ch_components(ch_det_tz));
    BundleClass c_tz = c_from_ch(ch_components(ch_tz));
    BundleClass q_ext = BundleClass::from_total(c_det_tz.rank + c_tz.rank, c_det_tz.total() * c_tz.total());

    // Degree 3: both computations of c3(Q) agree.
    FormalClass deg3 = (q_ext.c[3] - q_sub.c[3]).substitute("Z", z_from_c2);
    Monomial c2h(x.table()->size(), 0);
    c2h[0] = 1;
    c2h[1] = 1;
    mpq_class lead = deg3.coefficient(c2h);
    if (lead == 0)
        throw std::logic_error("degree-3 comparison does not involve c2 h");
    FormalClass c2h_relation = deg3 * (1 / lead);

    // Degree 4: c4(Q) from the extension equals c4 - 435 h^4 + 45 h^2 Z.
    FormalClass diff = q_sub.c[4] - q_ext.c[4];
    Monomial c4m(x.table()->size(), 0);
    c4m[2] = 1;
    if (diff.coefficient(c4m) != 1)
        throw std::logic_error("degree-4 comparison is not linear in c4 with coefficient 1");
    FormalClass c4_expression = c4 - diff;
    FormalClass c4_in_c2 = c4_expression.substitute("Z", z_from_c2);
    mpq_class c4_degree = x.degree(c4_expression);
    if (c4_degree != x.degree(c4_in_c2))
        throw std::logic_error("the two forms of c4 have different degrees");

    const FormalClass five_h3 = h.pow(3) * mpq_class(5);
    std::vector<Relation> relations = {
        {"thom_porteous", Z * mpq_class(3), h * h * mpq_class(15) - c2,
         degree_pair(x.degree(Z * h * h * mpq_class(3)), x.degree((h * h * mpq_class(15) - c2) * h * h)) + " (times h^2)"},
        {"hZ_equals_10_3_h3", h * Z * mpq_class(3), h.pow(3) * mpq_class(10),
         degree_pair(x.degree(h * h * Z * mpq_class(3)), x.degree(h.pow(4) * mpq_class(10))) + " (times h)"},
        {"c2h_equals_5h3", c2 * h, five_h3,
         degree_pair(x.degree(c2 * h * h), x.degree(five_h3 * h)) + " (times h)"},
        {"c4_in_h_Z", c4, c4_expression, degree_pair(x.degree(c4), c4_degree)},
        {"c4_in_h_c2", c4, c4_in_c2, degree_pair(x.degree(c4), x.degree(c4_in_c2))},
    };
    return {q_raw, q_sub, ch_det_tz, ch_tz, c_det_tz, c_tz, q_ext, c2h_relation, c4_expression, c4_in_c2, c4_degree, relations};
}

FormalClass canonical_class_replay(const EmbeddingModel& emb, const FormalClass& c1_f)
{
    if (c1_f.table() != emb.surface() || !c1_f.is_pure(1))
        throw std::invalid_argument("c1(F) must be a codim-1 class on the surface");
    // Slots N^v, F, O^2, N with signs +, -, +, -; c1(N^v) = -c1(N).
    // The sum is n * c1(N) + rest = 0 with n = -1 - 1.
    const BundleClass trivial = BundleClass::trivial(emb.surface(), 2);
    const mpq_class n = -2;
    const FormalClass rest = -c1_f + trivial.c[1];
    return rest * (mpq_class(-2) / n);
}

unsigned thom_porteous_local_multiplicity()
{
    const Field q = Field::rational();
    auto var = [&](std::size_t i) { return Polynomial::variable(q, 4, i); };
    auto cst = [&](long c) { return Polynomial::constant(q, 4, Scalar(q, c)); };
    const Polynomial x = var(0), y = var(1), zero = cst(0);
    // Jacobian of (x^2, xy, y^2, z, t).
    std::vector<std::vector<Polynomial>> df = {{x * Scalar(q, 2L), zero, zero, zero},
                                               {y, x, zero, zero},
                                               {zero, y * Scalar(q, 2L), zero, zero},
                                               {zero, zero, cst(1), zero},
                                               {zero, zero, zero, cst(1)}};
    std::vector<std::array<unsigned, 2>> gens;
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < 5; ++r)
            if (r != skip)
                rows.push_back(r);
        Polynomial det(q, 4);
        std::array<std::size_t, 4> perm{0, 1, 2, 3};
        do {
            int inv = 0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    if (perm[i] > perm[j])
                        ++inv;
            Polynomial term = cst(inv % 2 ? -1 : 1);
            for (std::size_t i = 0; i < 4; ++i)
                term = term * df[rows[i]][perm[i]];
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (det.is_zero())
            continue;
        if (det.terms().size() != 1)
            throw std::logic_error("local minor is not a monomial");
        const auto& e = det.terms().begin()->first;
        if (e[2] || e[3])
            throw std::logic_error("local minor involves the directions along Z");
        gens.push_back({e[0], e[1]});
    }
    // Count monomials x^a y^b outside the ideal.
    unsigned maxa = 0, maxb = 0;
    for (const auto& g : gens) {
        if (g[1] == 0)
            maxa = std::max(maxa, g[0]);
        if (g[0] == 0)
            maxb = std::max(maxb, g[1]);
    }
    if (maxa == 0 || maxb == 0)
        throw std::logic_error("ideal of minors has infinite colength");
    unsigned count = 0;
    for (unsigned a = 0; a < maxa; ++a)
        for (unsigned b = 0; b < maxb; ++b) {
            bool in = std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return a >= g[0] && b >= g[1]; });
            if (!in)
                ++count;
        }
    return count;
}

std::vector<std::array<unsigned, 2>> annihilator_local_model()
{
    const std::vector<std::array<unsigned, 2>> i1{{1, 0}, {0, 2}}, i2{{2, 0}, {0, 1}};
    std::vector<std::array<unsigned, 2>> lcms;
    for (const auto& a : i1)
        for (const auto& b : i2)
            lcms.push_back({std::max(a[0], b[0]), std::max(a[1], b[1])});
    std::vector<std::array<unsigned, 2>> minimal;
    for (const auto& g : lcms) {
        bool redundant = false;
        for (const auto& o : lcms)
            if (o != g && g[0] >= o[0] && g[1] >= o[1])
                redundant = true;
        if (!redundant && std::find(minimal.begin(), minimal.end(), g) == minimal.end())
            minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), std::greater<>());
    return minimal;
}

} // namespace sextic::chow
