#include "ecumene/parser.hpp"

namespace ecumene {

namespace {

std::string atom_text(const Formula& f, Format fmt) {
    std::string s = f.name();
    bool cls = f.kind() == Kind::AtomC;
    if (fmt == Format::Latex) s += cls ? "_{c}" : "_{i}";
    else s += cls ? "_c" : "_i";
    if (!f.terms().empty()) {
        s += '(';
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
            if (i) s += ", ";
            s += render(f.terms()[i]);
        }
        s += ')';
    }
    return s;
}

const char* op_text(Kind k, Format fmt) {
    bool tex = fmt == Format::Latex;
    switch (k) {
    case Kind::And: return tex ? " \\wedge " : " /\\ ";
    case Kind::OrI: return tex ? " \\vee_{i} " : " \\/i ";
    case Kind::OrC: return tex ? " \\vee_{c} " : " \\/c ";
    case Kind::ImpI: return tex ? " \\to_{i} " : " ->i ";
    case Kind::ImpC: return tex ? " \\to_{c} " : " ->c ";
    case Kind::Neg: return tex ? "\\neg " : "~";
    case Kind::Box: return tex ? "\\Box " : "box ";
    case Kind::DiaI: return tex ? "\\Diamond_{i} " : "diai ";
    case Kind::DiaC: return tex ? "\\Diamond_{c} " : "diac ";
    case Kind::ForAll: return tex ? "\\forall " : "forall ";
    case Kind::ExistsI: return tex ? "\\exists_{i} " : "existsi ";
    case Kind::ExistsC: return tex ? "\\exists_{c} " : "existsc ";
    default: return "";
    }
}

int prec(Kind k) {
    switch (k) {
    case Kind::ImpI:
    case Kind::ImpC: return 1;
    case Kind::OrI:
    case Kind::OrC: return 2;
    case Kind::And: return 3;
    default: return 4;
    }
}

std::string go(const Formula& f, int ctx, Format fmt) {
    Kind k = f.kind();
    bool tex = fmt == Format::Latex;
    const std::string lp = "(", rp = ")";
    switch (k) {
    case Kind::AtomI:
    case Kind::AtomC: return atom_text(f, fmt);
    case Kind::Bottom: return tex ? "\\bot" : "bot";
    case Kind::Top: return tex ? "\\top" : "top";
    case Kind::Neg:
    case Kind::Box:
    case Kind::DiaI:
    case Kind::DiaC: return op_text(k, fmt) + go(f.body(), 4, fmt);
    case Kind::ForAll:
    case Kind::ExistsI:
    case Kind::ExistsC: {
        std::string s = op_text(k, fmt) + f.name() + (tex ? ".\\, " : ". ") + go(f.body(), 0, fmt);
        return ctx > 0 ? lp + s + rp : s;
    }
    default: {
        int p = prec(k);
        std::string l, r;
        if (p == 1) {
            l = go(f.lhs(), 2, fmt);
            r = go(f.rhs(), 1, fmt);
        } else {
            l = go(f.lhs(), p, fmt);
            r = go(f.rhs(), p + 1, fmt);
        }
        std::string s = l + op_text(k, fmt) + r;
        return ctx > p ? lp + s + rp : s;
    }
    }
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i];
    }
    return out;
}

std::string lab(const Labeled& l, Format fmt) {
    std::string f = render(l.f, fmt);
    return l.label.empty() ? f : l.label + ":" + f;
}

std::string node_text(const NestedNode& n, Format fmt) {
    bool tex = fmt == Format::Latex;
    std::vector<std::string> items;
    for (const auto& f : n.left) items.push_back((tex ? "\\bullet " : "+") + render(f, fmt));
    for (const auto& f : n.right) items.push_back((tex ? "\\blacktriangle " : "-") + render(f, fmt));
    if (n.out) items.push_back((tex ? "\\circ " : "!") + render(*n.out, fmt));
    for (const auto& k : n.kids) items.push_back("[" + node_text(k, fmt) + "]");
    return join(items);
}

std::string rule_tex_name(const std::string& id) {
    std::string out;
    for (char c : id) {
        if (c == '_') out += "\\_";
        else out += c;
    }
    return out;
}

void proof_tex(const ProofTree& t, std::string& out) {
    for (const auto& p : t.premises) proof_tex(p, out);
    if (t.premises.empty()) out += "\\AxiomC{}\n";
    out += "\\RightLabel{\\scriptsize " + rule_tex_name(t.rule.id) + "}\n";
    const char* inf = t.premises.size() <= 1 ? "\\UnaryInfC" : t.premises.size() == 2 ? "\\BinaryInfC" : "\\TrinaryInfC";
    out += std::string(inf) + "{$" + render(t.conclusion, Format::Latex) + "$}\n";
}

}  // namespace

std::string render(const Term& t) {
    if (t.args.empty()) return t.name;
    std::vector<std::string> a;
    for (const auto& x : t.args) a.push_back(render(x));
    return t.name + "(" + join(a) + ")";
}

std::string render(const Formula& f, Format fmt) { return go(f, 0, fmt); }

std::string render(const LESequent& s, Format fmt) {
    std::vector<std::string> g;
    for (const auto& f : s.gamma) g.push_back(render(f, fmt));
    std::string ts = fmt == Format::Latex ? "\\vdash" : "|-";
    std::string out = g.empty() ? ts : join(g) + " " + ts;
    return out + " " + render(s.succ, fmt);
}

std::string render(const StoupSequent& s, Format fmt) {
    bool tex = fmt == Format::Latex;
    std::vector<std::string> g, d;
    for (const auto& r : s.rel) g.push_back("R(" + r.x + "," + r.y + ")");
    for (const auto& l : s.gamma) g.push_back(lab(l, fmt));
    for (const auto& l : s.delta) d.push_back(lab(l, fmt));
    std::string out = g.empty() ? "" : join(g) + " ";
    out += tex ? "\\vdash " : "|- ";
    if (!d.empty()) out += join(d) + " ";
    out += "; ";
    out += s.stoup ? lab(*s.stoup, fmt) : std::string(tex ? "\\cdot" : ".");
    return out;
}

std::string render(const NestedSequent& s, Format fmt) { return node_text(s, fmt); }

std::string render(const Sequent& s, Format fmt) {
    return std::visit([&](const auto& x) { return render(x, fmt); }, s);
}

std::string render(const ProofTree& t, Format fmt) {
    if (fmt == Format::Text) return serialize_proof(t);
    std::string out = "\\begin{prooftree}\n";
    proof_tex(t, out);
    return out + "\\end{prooftree}\n";
}

}  // namespace ecumene
