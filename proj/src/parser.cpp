#include "ecumene/parser.hpp"

#include <cctype>
#include <map>

namespace ecumene {

namespace {

enum class Tok {
    Ident, LParen, RParen, LBrack, RBrack, Comma, Dot, Semi, Colon,
    Tilde, And, OrI, OrC, ImpI, ImpC, IffI, Turnstile, Plus, Minus, Bang, End
};

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(s.substr(i, len)), {i, i + len}});
        i += len;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            push(Tok::Ident, j - i);
            continue;
        }
        auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
        if (starts("<->i")) push(Tok::IffI, 4);
        else if (starts("->i")) push(Tok::ImpI, 3);
        else if (starts("->c")) push(Tok::ImpC, 3);
        else if (starts("\\/i")) push(Tok::OrI, 3);
        else if (starts("\\/c")) push(Tok::OrC, 3);
        else if (starts("/\\")) push(Tok::And, 2);
        else if (starts("|-")) push(Tok::Turnstile, 2);
        else if (c == '(') push(Tok::LParen, 1);
        else if (c == ')') push(Tok::RParen, 1);
        else if (c == '[') push(Tok::LBrack, 1);
        else if (c == ']') push(Tok::RBrack, 1);
        else if (c == ',') push(Tok::Comma, 1);
        else if (c == '.') push(Tok::Dot, 1);
        else if (c == ';') push(Tok::Semi, 1);
        else if (c == ':') push(Tok::Colon, 1);
        else if (c == '~') push(Tok::Tilde, 1);
        else if (c == '+') push(Tok::Plus, 1);
        else if (c == '-') push(Tok::Minus, 1);
        else if (c == '!') push(Tok::Bang, 1);
        else throw ParseError({i, i + 1}, std::string("unknown token '") + c + "'");
    }
    out.push_back({Tok::End, "", {s.size(), s.size()}});
    return out;
}

bool is_keyword(const std::string& w) {
    return w == "forall" || w == "existsi" || w == "existsc" || w == "box" || w == "diai" ||
           w == "diac" || w == "bot" || w == "top";
}

bool atom_ident(const std::string& w) {
    return w.size() > 2 && w[w.size() - 2] == '_' && (w.back() == 'i' || w.back() == 'c');
}

class Parser {
public:
    explicit Parser(std::string_view s) : toks_(lex(s)) {}

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    Token expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        return take();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().span, msg); }
    void expect_end() {
        if (!at(Tok::End)) fail("unexpected token '" + peek().text + "'");
    }

    Formula formula() {
        Formula a = implication();
        if (at(Tok::IffI)) {
            take();
            Formula b = implication();
            return conj(imp_i(a, b), imp_i(b, a));
        }
        return a;
    }

    Term term() {
        Token t = take();
        if (t.kind != Tok::Ident || is_keyword(t.text) || atom_ident(t.text))
            throw ParseError(t.span, "expected term");
        if (!at(Tok::LParen)) return Term::var(t.text);
        take();
        std::vector<Term> args;
        if (!at(Tok::RParen)) {
            args.push_back(term());
            while (at(Tok::Comma)) {
                take();
                args.push_back(term());
            }
        }
        expect(Tok::RParen, "')'");
        return Term::fn(t.text, std::move(args));
    }

    bool at_label() const { return at(Tok::Ident) && peek(1).kind == Tok::Colon; }

    std::string label() {
        Token t = take();
        if (t.kind != Tok::Ident || is_keyword(t.text)) throw ParseError(t.span, "expected label");
        expect(Tok::Colon, "':'");
        return t.text;
    }

private:
    Formula implication() {
        Formula a = disjunction();
        if (at(Tok::ImpI) || at(Tok::ImpC)) {
            Kind k = take().kind == Tok::ImpI ? Kind::ImpI : Kind::ImpC;
            return make_binary(k, a, implication());
        }
        return a;
    }

    Formula disjunction() {
        Formula a = conjunction();
        while (at(Tok::OrI) || at(Tok::OrC)) {
            Kind k = take().kind == Tok::OrI ? Kind::OrI : Kind::OrC;
            a = make_binary(k, a, conjunction());
        }
        return a;
    }

    Formula conjunction() {
        Formula a = unary();
        while (at(Tok::And)) {
            take();
            a = conj(a, unary());
        }
        return a;
    }

    Formula unary() {
        if (at(Tok::Tilde)) {
            take();
            return neg(unary());
        }
        if (at(Tok::Ident)) {
            const std::string& w = peek().text;
            if (w == "box" || w == "diai" || w == "diac") {
                take();
                Kind k = w == "box" ? Kind::Box : w == "diai" ? Kind::DiaI : Kind::DiaC;
                return make_unary(k, unary());
            }
            if (w == "forall" || w == "existsi" || w == "existsc") {
                Token q = take();
                Kind k = q.text == "forall" ? Kind::ForAll : q.text == "existsi" ? Kind::ExistsI : Kind::ExistsC;
                if (!at(Tok::Ident) || is_keyword(peek().text) || atom_ident(peek().text))
                    throw ParseError(q.span, "dangling quantifier");
                std::string x = take().text;
                if (!at(Tok::Dot)) throw ParseError(q.span, "dangling quantifier");
                take();
                if (at(Tok::End) || at(Tok::RParen) || at(Tok::Comma) || at(Tok::RBrack) || at(Tok::Semi) ||
                    at(Tok::Turnstile))
                    throw ParseError(q.span, "dangling quantifier");
                return make_quant(k, x, formula());
            }
        }
        return primary();
    }

    Formula primary() {
        if (at(Tok::LParen)) {
            take();
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (!at(Tok::Ident)) fail(at(Tok::End) ? "unexpected end of input" : "unexpected token '" + peek().text + "'");
        Token t = take();
        if (t.text == "bot") return bot();
        if (t.text == "top") return top();
        if (!atom_ident(t.text))
            throw ParseError(t.span, "unknown token '" + t.text + "' (atoms end in _i or _c)");
        std::string base = t.text.substr(0, t.text.size() - 2);
        bool classical = t.text.back() == 'c';
        std::vector<Term> args;
        if (at(Tok::LParen)) {
            take();
            if (!at(Tok::RParen)) {
                args.push_back(term());
                while (at(Tok::Comma)) {
                    take();
                    args.push_back(term());
                }
            }
            expect(Tok::RParen, "')'");
        }
        auto it = arity_.find(base);
        if (it == arity_.end()) arity_[base] = args.size();
        else if (it->second != args.size()) throw ParseError(t.span, "arity clash for atom '" + base + "'");
        return classical ? atom_c(base, std::move(args)) : atom_i(base, std::move(args));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> arity_;
};

bool formula_start(const Parser& p) {
    return !(p.at(Tok::End) || p.at(Tok::Semi) || p.at(Tok::Turnstile) || p.at(Tok::Comma) ||
             p.at(Tok::RBrack));
}

std::vector<Formula> formula_list(Parser& p) {
    std::vector<Formula> out;
    if (!formula_start(p)) return out;
    out.push_back(p.formula());
    while (p.at(Tok::Comma)) {
        p.take();
        if (!formula_start(p)) break;
        out.push_back(p.formula());
    }
    return out;
}

std::vector<Labeled> labeled_list(Parser& p, std::vector<RelAtom>* rel) {
    std::vector<Labeled> out;
    while (formula_start(p)) {
        if (rel && p.at(Tok::Ident) && p.peek().text == "R" && p.peek(1).kind == Tok::LParen) {
            p.take();
            p.take();
            Token x = p.expect(Tok::Ident, "label");
            p.expect(Tok::Comma, "','");
            Token y = p.expect(Tok::Ident, "label");
            p.expect(Tok::RParen, "')'");
            rel->push_back({x.text, y.text});
        } else {
            if (!p.at_label()) p.fail("unlabeled formula in labeled sequent");
            std::string l = p.label();
            out.push_back({l, p.formula()});
        }
        if (!p.at(Tok::Comma)) break;
        p.take();
    }
    return out;
}

StoupSequent stoup_sequent(std::string_view text, bool labeled) {
    Parser p(text);
    StoupSequent s;
    if (labeled) {
        s.gamma = labeled_list(p, &s.rel);
    } else {
        for (auto& f : formula_list(p)) s.gamma.push_back({"", f});
    }
    p.expect(Tok::Turnstile, "'|-'");
    if (labeled) {
        s.delta = labeled_list(p, nullptr);
    } else {
        for (auto& f : formula_list(p)) s.delta.push_back({"", f});
    }
    p.expect(Tok::Semi, "';'");
    if (p.at(Tok::Dot) && p.peek(1).kind == Tok::End) {
        p.take();
    } else {
        if (labeled) {
            if (!p.at_label()) p.fail("unlabeled formula in labeled sequent");
            std::string l = p.label();
            s.stoup = Labeled{l, p.formula()};
        } else {
            s.stoup = Labeled{"", p.formula()};
        }
        if (p.at(Tok::Comma)) p.fail("stoup holds at most one formula");
    }
    p.expect_end();
    return s;
}

void nested_items(Parser& p, NestedNode& n) {
    while (!p.at(Tok::End) && !p.at(Tok::RBrack)) {
        if (p.at(Tok::Plus)) {
            p.take();
            n.left.push_back(p.formula());
        } else if (p.at(Tok::Minus)) {
            p.take();
            n.right.push_back(p.formula());
        } else if (p.at(Tok::Bang)) {
            Span sp = p.take().span;
            if (n.out) throw ParseError(sp, "exactly one output formula");
            n.out = p.formula();
        } else if (p.at(Tok::LBrack)) {
            p.take();
            NestedNode k;
            nested_items(p, k);
            p.expect(Tok::RBrack, "']'");
            n.kids.push_back(std::move(k));
        } else {
            p.fail("expected '+', '-', '!' or '['");
        }
        if (!p.at(Tok::Comma)) break;
        p.take();
    }
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Parser p(text);
    Formula f = p.formula();
    p.expect_end();
    return f;
}

Term parse_term(std::string_view text) {
    Parser p(text);
    Term t = p.term();
    p.expect_end();
    return t;
}

LESequent parse_le_sequent(std::string_view text) {
    Parser p(text);
    LESequent s;
    s.gamma = formula_list(p);
    p.expect(Tok::Turnstile, "'|-'");
    if (p.at(Tok::End)) {
        s.succ = bot();
    } else {
        s.succ = p.formula();
        if (p.at(Tok::Comma)) p.fail("LE sequents have exactly one succedent");
    }
    p.expect_end();
    return s;
}

StoupSequent parse_stoup_sequent(std::string_view text) { return stoup_sequent(text, false); }
LabeledSequent parse_labeled_sequent(std::string_view text) { return stoup_sequent(text, true); }

NestedSequent parse_nested_sequent(std::string_view text) {
    Parser p(text);
    NestedNode root;
    nested_items(p, root);
    p.expect_end();
    if (count_outputs(root) > 1) throw ParseError({0, text.size()}, "exactly one output formula");
    return root;
}

Sequent parse_sequent(Calculus c, std::string_view text) {
    switch (c) {
    case Calculus::LE: return parse_le_sequent(text);
    case Calculus::LCE: return parse_stoup_sequent(text);
    case Calculus::LabEK: return parse_labeled_sequent(text);
    case Calculus::NEK: return parse_nested_sequent(text);
    }
    return parse_stoup_sequent(text);
}

}  // namespace ecumene
