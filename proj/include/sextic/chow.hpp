#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

// Formal intersection calculus with rational coefficients. Classes are
// polynomials in graded symbols, truncated above the dimension of the table.
namespace sextic::chow {

struct Symbol {
    std::string name;
    int codim;
};

class SymbolTable {
public:
    SymbolTable(std::vector<Symbol> symbols, int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return symbols_.size(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    std::size_t index_of(const std::string& name) const;

private:
    std::vector<Symbol> symbols_;
    int dim_;
};

using TablePtr = std::shared_ptr<const SymbolTable>;
using Monomial = std::vector<std::uint8_t>; // exponent per symbol

class FormalClass {
public:
    explicit FormalClass(TablePtr table) : table_(std::move(table)) {}
    static FormalClass constant(TablePtr table, const mpq_class& c);
    static FormalClass symbol(TablePtr table, const std::string& name);

    const TablePtr& table() const { return table_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    int codim_of(const Monomial& m) const;

    void add_term(const Monomial& m, const mpq_class& c);
    mpq_class coefficient(const Monomial& m) const;

    FormalClass& operator+=(const FormalClass& o);
    FormalClass& operator-=(const FormalClass& o);
    friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
    friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
    FormalClass operator-() const;
    FormalClass operator*(const FormalClass& o) const;
    FormalClass operator*(const mpq_class& c) const;
    FormalClass pow(unsigned e) const;

    // Homogeneous component of codimension k.
    FormalClass part(int k) const;
    bool is_pure(int k) const;
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const FormalClass& o) const;

    // Replace a symbol by a class of the same codimension.
    FormalClass substitute(const std::string& name, const FormalClass& replacement) const;

    std::string to_string() const;

private:
    void check(const FormalClass& o) const;

    TablePtr table_;
    std::map<Monomial, mpq_class> terms_;
};

FormalClass operator*(const mpq_class& c, const FormalClass& x);

// Total class 1 + c_1 + ... + c_dim and the rank.
struct BundleClass {
    mpq_class rank;
    std::vector<FormalClass> c; // c[0] = 1

    static BundleClass trivial(TablePtr table, const mpq_class& rank);
    static BundleClass from_total(const mpq_class& rank, const FormalClass& total);
    FormalClass total() const;
};

// ch_0..ch_dim.
using ChernCharacter = std::vector<FormalClass>;

ChernCharacter ch_from_c(const BundleClass& b);
BundleClass c_from_ch(const ChernCharacter& ch);
FormalClass ch_total(const ChernCharacter& ch);
ChernCharacter ch_components(const FormalClass& total);

FormalClass todd_from_c(const BundleClass& b);
// Multiplicative inverse of a class with constant term 1.
FormalClass series_inverse(const FormalClass& x);

// The four-fold model: symbols h, c2, c4, Z and the degree table on codim 4.
class VarietyModel {
public:
    VarietyModel();

    const TablePtr& table() const { return table_; }
    FormalClass h() const { return FormalClass::symbol(table_, "h"); }
    FormalClass c2() const { return FormalClass::symbol(table_, "c2"); }
    FormalClass c4() const { return FormalClass::symbol(table_, "c4"); }
    FormalClass Z() const { return FormalClass::symbol(table_, "Z"); }
    FormalClass one() const { return FormalClass::constant(table_, 1); }

    // Total Chern class of T_X: 1 + c2 + c4.
    BundleClass tangent() const;
    // Line bundle O(n) = O(n h).
    BundleClass line_bundle(const mpq_class& n) const;

    mpq_class degree(const FormalClass& x) const;
    const std::vector<std::pair<FormalClass, mpq_class>>& degree_table() const { return table_entries_; }

private:
    TablePtr table_;
    std::vector<std::pair<FormalClass, mpq_class>> table_entries_;
};

// 3 deg(Z m) = 15 deg(h^2 m) - deg(c2 m) for m in {h^2, c2, Z}.
bool thom_porteous_table_identity(const VarietyModel& x);
// deg((1/240)(c2^2 - c4/3)).
mpq_class hirzebruch_chi(const VarietyModel& x);

mpq_class hrr_chi(const VarietyModel& x, const BundleClass& b);

// Codim-2 part of c(e) c(f)^{-1}.
FormalClass chern_difference(const BundleClass& e, const BundleClass& f);
FormalClass chern_quotient(const BundleClass& e, const BundleClass& f);

// Exact sequence 0 -> E_0 -> E_1 -> ... -> E_m -> 0 with one unknown term:
// prod c(E_i)^{(-1)^i} = 1 is solved for the unknown total class.
struct SequenceSlot {
    bool unknown = false;
    BundleClass bundle;
};
BundleClass whitney_solve(const std::vector<SequenceSlot>& sequence);

// The Lagrangian surface Z inside the model, with symbols hZ (1) and c2Z (2).
class EmbeddingModel {
public:
    explicit EmbeddingModel(const VarietyModel& x);

    const VarietyModel& ambient() const { return x_; }
    const TablePtr& surface() const { return s_; }
    FormalClass hZ() const { return FormalClass::symbol(s_, "hZ"); }
    FormalClass c2Z() const { return FormalClass::symbol(s_, "c2Z"); }
    FormalClass one() const { return FormalClass::constant(s_, 1); }

    // c_1(T_Z) = -3 hZ; the normal bundle is the cotangent bundle.
    BundleClass tangent_of_surface() const;
    BundleClass normal_bundle() const;

    // 1 -> Z, hZ -> h Z, hZ^2 -> h^2 Z, c2Z -> Z^2.
    FormalClass push(const FormalClass& y) const;

private:
    VarietyModel x_;
    TablePtr s_;
};

// ch(i_* F) = i_*(ch(F) td(N)^{-1}).
FormalClass grr_push(const EmbeddingModel& emb, const ChernCharacter& sheaf);

struct Relation {
    std::string name;
    FormalClass lhs;
    FormalClass rhs;
    std::string degree_check;
};
nlohmann::ordered_json to_json(const Relation& r);

struct ChernDerivation {
    BundleClass q_from_cotangent;       // raw Whitney solution
    BundleClass q_from_cotangent_sub;   // after c2 -> 15 h^2 - 3 Z
    FormalClass ch_det_tz, ch_tz;       // GRR pushforwards
    BundleClass c_det_tz, c_tz;         // their Chern classes
    BundleClass q_from_extension;       // Whitney on the extension
    FormalClass c2h_relation;           // normalized to c2 h - 5 h^3 (should be zero)
    FormalClass c4_expression;          // c4 in terms of h, Z
    FormalClass c4_in_c2;               // c4 in terms of h, c2
    mpq_class c4_degree;
    std::vector<Relation> relations;
};
ChernDerivation derive_chern_relations(const VarietyModel& x);

// 2 c1(N) from the alternating c_1 sum of 0 -> N^v -> F -> trivial -> N -> 0.
FormalClass canonical_class_replay(const EmbeddingModel& emb, const FormalClass& c1_f);

// Colength of the ideal of 4x4 minors of the local differential of (x^2, xy, y^2, z, t).
unsigned thom_porteous_local_multiplicity();
// (x, y^2) meet (x^2, y) as a minimal monomial generating set (exponent pairs).
std::vector<std::array<unsigned, 2>> annihilator_local_model();

} // namespace sextic::chow
