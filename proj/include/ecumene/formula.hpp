#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ecumene {

struct Term {
    std::string name;
    bool is_var = true;
    std::vector<Term> args;

    static Term var(std::string n) { return Term{std::move(n), true, {}}; }
    static Term fn(std::string n, std::vector<Term> a) { return Term{std::move(n), false, std::move(a)}; }

    bool operator==(const Term& o) const {
        return name == o.name && args == o.args && (is_var == o.is_var || args.empty());
    }
};

enum class Kind : std::uint8_t {
    AtomI, AtomC, Bottom, Top,
    And, OrI, OrC, ImpI, ImpC,
    Neg, ForAll, ExistsI, ExistsC,
    Box, DiaI, DiaC
};

enum class Polarity { Positive, Negative, Unpolarized };

struct Node;

// Immutable, shared formula handle. Equality is alpha-equivalence.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}

    Kind kind() const;
    // atom base name, or the bound variable of a quantifier
    const std::string& name() const;
    const std::vector<Term>& terms() const;
    const Formula& lhs() const;
    const Formula& rhs() const;
    const Formula& body() const { return lhs(); }
    const std::string& key() const;
    std::size_t hash() const;

    explicit operator bool() const { return p_ != nullptr; }
    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }
    bool operator<(const Formula& o) const { return key() < o.key(); }

private:
    std::shared_ptr<const Node> p_;
};

struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> terms;
    Formula a, b;
    std::string key;
    std::size_t hash = 0;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula atom_i(std::string name, std::vector<Term> terms = {});
Formula atom_c(std::string name, std::vector<Term> terms = {});
Formula bot();
Formula top();
Formula conj(Formula a, Formula b);
Formula disj_i(Formula a, Formula b);
Formula disj_c(Formula a, Formula b);
Formula imp_i(Formula a, Formula b);
Formula imp_c(Formula a, Formula b);
Formula neg(Formula a);
Formula forall(std::string x, Formula a);
Formula exists_i(std::string x, Formula a);
Formula exists_c(std::string x, Formula a);
Formula box(Formula a);
Formula dia_i(Formula a);
Formula dia_c(Formula a);
Formula make_binary(Kind k, Formula a, Formula b);
Formula make_unary(Kind k, Formula a);
Formula make_quant(Kind k, std::string x, Formula a);

bool is_atom(Kind k);
bool is_binary(Kind k);
bool is_quantifier(Kind k);
bool is_modal(Kind k);

Polarity polarity(const Formula& f);
bool is_positive(const Formula& f);
bool is_negative(const Formula& f);
bool is_externally_classical(const Formula& f);
bool is_eec(const Formula& f);
unsigned ecumenical_weight(const Formula& f);

std::set<std::string> term_vars(const Term& t);
Term substitute_term(const Term& t, const std::string& x, const Term& s);
Formula substitute(const Formula& f, const std::string& x, const Term& t);
std::set<std::string> free_vars(const Formula& f);
// every variable or function name occurring, bound or free
std::set<std::string> all_names(const Formula& f);
std::string fresh_var(const std::set<std::string>& avoid, const std::string& prefix = "y");

bool has_quantifier(const Formula& f);
bool has_modality(const Formula& f);
std::set<std::string> atom_names(const Formula& f);
std::vector<Term> ground_terms(const Formula& f);
std::size_t formula_size(const Formula& f);

// Renames bound variables to v0, v1, ... avoiding free names.
Formula alpha_normalize(const Formula& f);

}  // namespace ecumene

template <>
struct std::hash<ecumene::Formula> {
    std::size_t operator()(const ecumene::Formula& f) const { return f.hash(); }
};
