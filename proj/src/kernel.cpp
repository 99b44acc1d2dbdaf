#include <cctype>

#include "ecumene/labek.hpp"
#include "ecumene/lce.hpp"
#include "ecumene/nek.hpp"
#include "ecumene/parser.hpp"

namespace ecumene {

std::string calculus_name(Calculus c) {
    switch (c) {
    case Calculus::LE: return "le";
    case Calculus::LCE: return "lce";
    case Calculus::LabEK: return "labek";
    case Calculus::NEK: return "nek";
    }
    return "?";
}

std::optional<Calculus> calculus_from_name(const std::string& s) {
    if (s == "le") return Calculus::LE;
    if (s == "lce") return Calculus::LCE;
    if (s == "labek") return Calculus::LabEK;
    if (s == "nek") return Calculus::NEK;
    return std::nullopt;
}

std::string outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Proved: return "proved";
    case Outcome::Refuted: return "refuted-by-saturation";
    case Outcome::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

bool is_cut_rule(const std::string& id) { return id == "cut" || id == "Pcut" || id == "Ncut" || id == "icut" || id == "ccut"; }

std::vector<Sequent> premises_of(Calculus c, const RuleInstance& r, const Sequent& s, const CheckOptions& opts) {
    std::vector<Sequent> out;
    switch (c) {
    case Calculus::LE: {
        auto* q = std::get_if<LESequent>(&s);
        if (!q) throw RuleError("sequent does not belong to LE");
        for (auto& p : le_premises(r, *q)) out.emplace_back(std::move(p));
        break;
    }
    case Calculus::LCE:
    case Calculus::LabEK: {
        auto* q = std::get_if<StoupSequent>(&s);
        if (!q) throw RuleError("sequent does not belong to " + calculus_name(c));
        for (auto& p : stoup_premises(r, *q, c == Calculus::LabEK)) out.emplace_back(std::move(p));
        break;
    }
    case Calculus::NEK: {
        auto* q = std::get_if<NestedSequent>(&s);
        if (!q) throw RuleError("sequent does not belong to nEK");
        for (auto& p : nek_premises(r, *q, opts.ext, opts.fragment, opts.printed_variants))
            out.emplace_back(std::move(p));
        break;
    }
    }
    return out;
}

namespace {

bool check_node(Calculus c, const ProofTree& t, const CheckOptions& opts, std::vector<int>& path, CheckResult& res) {
    auto bad = [&](const std::string& why) {
        res.valid = false;
        res.path = path;
        res.reason = why;
        return false;
    };
    if (is_cut_rule(t.rule.id) && !opts.allow_cuts) return bad("cut disallowed");
    if (c == Calculus::NEK && opts.fragment != Fragment::Full) {
        auto* q = std::get_if<NestedSequent>(&t.conclusion);
        if (q && !in_fragment_language(*q, opts.fragment)) return bad("formula outside the fragment language");
    }
    std::vector<Sequent> ps;
    try {
        ps = premises_of(c, t.rule, t.conclusion, opts);
    } catch (const RuleError& e) {
        return bad(e.what());
    }
    if (ps.size() != t.premises.size())
        return bad(t.rule.id + " expects " + std::to_string(ps.size()) + " premises, found " +
                   std::to_string(t.premises.size()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!sequent_equal(ps[i], t.premises[i].conclusion))
            return bad(t.rule.id + ": premise " + std::to_string(i) + " should be " + render(ps[i]));
    }
    if (c == Calculus::LCE && (t.rule.id == "ginit" || t.rule.id == "gcinit")) {
        const auto& s = std::get<StoupSequent>(t.conclusion);
        ProofTree ex = t.rule.id == "ginit" ? expand_ginit(s, s.stoup->f) : expand_gcinit(s, *t.rule.principal);
        CheckOptions o = opts;
        o.allow_cuts = false;
        CheckResult sub = check(c, ex, o);
        if (!sub.valid) return bad("macro expansion failed: " + sub.reason);
    }
    for (std::size_t i = 0; i < t.premises.size(); ++i) {
        path.push_back(static_cast<int>(i));
        if (!check_node(c, t.premises[i], opts, path, res)) return false;
        path.pop_back();
    }
    return true;
}

}  // namespace

CheckResult check(Calculus c, const ProofTree& t, const CheckOptions& opts) {
    CheckResult res;
    std::vector<int> path;
    check_node(c, t, opts, path, res);
    return res;
}

std::size_t proof_height(const ProofTree& t) {
    std::size_t h = 0;
    for (const auto& p : t.premises) h = std::max(h, proof_height(p));
    return h + 1;
}

std::size_t proof_size(const ProofTree& t) {
    std::size_t n = 1;
    for (const auto& p : t.premises) n += proof_size(p);
    return n;
}

bool uses_rule(const ProofTree& t, const std::string& id) {
    if (t.rule.id == id) return true;
    for (const auto& p : t.premises)
        if (uses_rule(p, id)) return true;
    return false;
}

void collect_rules(const ProofTree& t, std::set<std::string>& out) {
    out.insert(t.rule.id);
    for (const auto& p : t.premises) collect_rules(p, out);
}

// serialization

namespace {

std::string path_text(const NodePath& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s;
}

NodePath path_from(const std::string& s) {
    NodePath p;
    if (s == "-" || s.empty()) return p;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('.', i);
        if (j == std::string::npos) j = s.size();
        p.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return p;
}

void meta(std::string& out, const char* k, const std::string& v) {
    out += ' ';
    out += k;
    out += "=\"";
    out += v;
    out += '"';
}

void ser(const ProofTree& t, std::string& out, int depth) {
    out += std::string(depth * 2, ' ');
    out += "(" + t.rule.id + " {";
    const RuleInstance& r = t.rule;
    std::string m;
    if (r.principal) meta(m, "p", render(*r.principal));
    if (!r.label.empty()) meta(m, "l", r.label);
    if (std::holds_alternative<NestedSequent>(t.conclusion)) meta(m, "path", path_text(r.path));
    if (r.target) meta(m, "tgt", path_text(*r.target));
    if (r.witness) meta(m, "w", render(*r.witness));
    if (!r.eigen.empty()) meta(m, "e", r.eigen);
    if (!r.target_label.empty()) meta(m, "y", r.target_label);
    if (r.disjunct) meta(m, "j", std::to_string(r.disjunct));
    if (r.cut) meta(m, "cut", render(*r.cut));
    if (!r.cut_label.empty()) meta(m, "cl", r.cut_label);
    if (r.selector) meta(m, "sel", render(*r.selector));
    if (!r.selector_label.empty()) meta(m, "sl", r.selector_label);
    if (r.printed) meta(m, "pv", "1");
    if (!m.empty()) m.erase(0, 1);
    out += m + "} \"" + render(t.conclusion) + "\"";
    for (const auto& p : t.premises) {
        out += '\n';
        ser(p, out, depth + 1);
    }
    out += ')';
}

struct ProofReader {
    Calculus c;
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(Span{i, std::min(i + 1, s.size())}, why);
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    void expect(char ch) {
        ws();
        if (i >= s.size() || s[i] != ch) fail(std::string("expected '") + ch + "'");
        ++i;
    }
    std::string word() {
        ws();
        std::size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '{' && s[i] != '(' &&
               s[i] != ')' && s[i] != '=' && s[i] != '}' && s[i] != '"')
            ++i;
        if (b == i) fail("expected an identifier");
        return s.substr(b, i - b);
    }
    std::string quoted() {
        expect('"');
        std::size_t b = i;
        while (i < s.size() && s[i] != '"') ++i;
        if (i >= s.size()) fail("unterminated string");
        std::string v = s.substr(b, i - b);
        ++i;
        return v;
    }
    template <class F>
    auto sub(const std::string& text, F f) -> decltype(f(text)) {
        try {
            return f(text);
        } catch (const ParseError& e) {
            fail(e.message + " in \"" + text + "\"");
        }
    }
    ProofTree tree() {
        expect('(');
        ProofTree t;
        t.rule.id = word();
        expect('{');
        for (;;) {
            ws();
            if (i < s.size() && s[i] == '}') {
                ++i;
                break;
            }
            std::string k = word();
            expect('=');
            std::string v = quoted();
            RuleInstance& r = t.rule;
            if (k == "p") r.principal = sub(v, [](const std::string& x) { return parse_formula(x); });
            else if (k == "l") r.label = v;
            else if (k == "path") r.path = path_from(v);
            else if (k == "tgt") r.target = path_from(v);
            else if (k == "w") r.witness = sub(v, [](const std::string& x) { return parse_term(x); });
            else if (k == "e") r.eigen = v;
            else if (k == "y") r.target_label = v;
            else if (k == "j") r.disjunct = std::stoi(v);
            else if (k == "cut") r.cut = sub(v, [](const std::string& x) { return parse_formula(x); });
            else if (k == "cl") r.cut_label = v;
            else if (k == "sel") r.selector = sub(v, [](const std::string& x) { return parse_formula(x); });
            else if (k == "sl") r.selector_label = v;
            else if (k == "pv") r.printed = v == "1";
            else fail("unknown meta key " + k);
        }
        std::string concl = quoted();
        Calculus cc = c;
        t.conclusion = sub(concl, [cc](const std::string& x) { return parse_sequent(cc, x); });
        for (;;) {
            ws();
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            t.premises.push_back(tree());
        }
        return t;
    }
};

}  // namespace

std::string serialize_proof(const ProofTree& t) {
    std::string out;
    ser(t, out, 0);
    return out + "\n";
}

ProofTree parse_proof(Calculus c, const std::string& text) {
    ProofReader r{c, text};
    r.ws();
    while (r.i < text.size() && text[r.i] == '#') {
        while (r.i < text.size() && text[r.i] != '\n') ++r.i;
        r.ws();
    }
    ProofTree t = r.tree();
    r.ws();
    if (r.i != text.size()) r.fail("trailing input after proof");
    return t;
}

}  // namespace ecumene
