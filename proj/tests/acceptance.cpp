#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ecumene/labek.hpp"
#include "ecumene/lce.hpp"
#include "ecumene/nek.hpp"
#include "ecumene/parser.hpp"
#include "ecumene/semantics.hpp"
#include "support/gen.hpp"

using namespace ecumene;
using testing::data_path;

namespace {

struct Report {
    bool ok = true;
    std::ostringstream notes;

    void fail(const std::string& what) {
        if (ok) notes << what;
        else notes << "; " << what;
        ok = false;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

std::string str(Outcome o) { return outcome_name(o); }

StoupSequent lce_goal(const std::string& f) { return parse_stoup_sequent("|- ; " + f); }
LESequent le_goal(const std::string& f) { return parse_le_sequent("|- " + f); }

Extensions ext_of(const std::string& s) {
    Extensions e;
    for (char c : s) {
        if (c == 't') e.t = true;
        if (c == 'b') e.b = true;
        if (c == '4') e.four = true;
        if (c == '5') e.five = true;
    }
    return e;
}

FrameCondition frame_of(const Extensions& e) {
    FrameCondition c;
    c.reflexive = e.t;
    c.symmetric = e.b;
    c.transitive = e.four;
    c.euclidean = e.five;
    return c;
}

// Formulas proved by the modal provers, with the frame class they must be valid on.
struct Proved {
    Formula f;
    FrameCondition frame;
};
std::vector<Proved> modal_theorems;

bool cut_free_valid(Calculus c, const ProofTree& t, const CheckOptions& o = {}) {
    CheckOptions p = o;
    p.allow_cuts = false;
    return check(c, t, p).valid;
}

// -- criterion 1 -----------------------------------------------------------

Report theorem_items() {
    Report r;
    const std::vector<std::pair<std::string, std::string>> proved = {
        {"1", "(a_i \\/c b_i) ->i ~(~a_i /\\ ~b_i)"},
        {"1", "~(~a_i /\\ ~b_i) ->i (a_i \\/c b_i)"},
        {"2", "(a_i ->c b_i) ->i ~(a_i /\\ ~b_i)"},
        {"2", "~(a_i /\\ ~b_i) ->i (a_i ->c b_i)"},
        {"3", "(existsc x. a_i(x)) ->i ~(forall x. ~a_i(x))"},
        {"3", "~(forall x. ~a_i(x)) ->i (existsc x. a_i(x))"},
        {"4", "~~a_i ->c a_i"},
        {"5", "(a_i /\\ (a_i ->i b_i)) ->i b_i"},
        {"6", "(forall x. a_i(x)) ->i ~(existsc x. ~a_i(x))"},
        {"7", "(a_i /\\ (a_i ->c a_c)) ->i a_c"},
        {"8", "~~a_c ->i a_c"},
        {"9", "~(existsc x. ~a_c(x)) ->i forall x. a_c(x)"},
    };
    for (const auto& [item, f] : proved) {
        SearchResult a = le_prove(le_goal(f));
        SearchResult b = lce_prove(lce_goal(f));
        r.expect(a.proved() && cut_free_valid(Calculus::LE, *a.proof), "item " + item + " LE: " + str(a.outcome));
        r.expect(b.proved() && cut_free_valid(Calculus::LCE, *b.proof), "item " + item + " LCE: " + str(b.outcome));
    }
    const std::vector<std::pair<std::string, std::string>> refuted = {
        {"4", "~~a_i ->i a_i"},
        {"5", "(a_i /\\ (a_i ->c b_i)) ->i b_i"},
    };
    for (const auto& [item, f] : refuted) {
        Outcome a = le_prove(le_goal(f)).outcome, b = lce_prove(lce_goal(f)).outcome;
        r.expect(a == Outcome::Refuted, "item " + item + " negative part LE: " + str(a));
        r.expect(b == Outcome::Refuted, "item " + item + " negative part LCE: " + str(b));
        r.expect(countermodel_search(parse_formula(f), 3).has_value(), "item " + item + " has no countermodel");
    }
    // first-order converse: only non-provability within budget can be observed
    std::string conv = "~(existsc x. ~a_i(x)) ->i forall x. a_i(x)";
    Outcome a = le_prove(le_goal(conv)).outcome, b = lce_prove(lce_goal(conv)).outcome;
    r.expect(a != Outcome::Proved && b != Outcome::Proved, "item 6 converse was proved");
    r.notes << (r.ok ? "" : "; ") << "item 6 converse (first-order) not proved: LE " << str(a) << ", LCE " << str(b);
    return r;
}

// -- criterion 2 -----------------------------------------------------------

Report weakened_succedent() {
    Report r;
    for (const char* s : {"~b_i, a_i ->c b_i, a_i |- ; c_i", "|- b_i, a_i /\\ ~b_i, ~a_i ; c_i"}) {
        SearchResult p = lce_prove(parse_stoup_sequent(s));
        r.expect(p.proved(), std::string(s) + ": " + str(p.outcome));
        if (!p.proved()) continue;
        r.expect(cut_free_valid(Calculus::LCE, *p.proof), std::string(s) + ": proof does not check");
        r.expect(uses_rule(*p.proof, "W"), std::string(s) + ": no W node");
    }
    return r;
}

// -- criterion 3 -----------------------------------------------------------

Report collapse_guard() {
    Report r;
    Outcome o = lce_prove(lce_goal("a_i \\/i ~a_i")).outcome;
    r.expect(o == Outcome::Refuted, "excluded middle: " + str(o));
    ProofTree t = parse_proof(Calculus::LCE, testing::read_file(data_path("unpolarized_cut.proof")));
    CheckResult c = check(Calculus::LCE, t, {.allow_cuts = true});
    r.expect(!c.valid, "unpolarized cut derivation accepted");
    if (!c.valid) {
        r.expect(c.path.empty() && c.reason.find("negative") != std::string::npos, "rejected for: " + c.reason);
        r.notes << (r.ok ? "" : "; ") << "checker: " << c.reason;
    }
    return r;
}

// -- criteria 4 and 5 ------------------------------------------------------

struct CorpusRun {
    std::vector<ProofTree> to_eliminate;
};

Report corpus_equivalence(CorpusRun& run) {
    Report r;
    auto lines = testing::read_lines(data_path("lce_corpus.txt"));
    int agree = 0, provable = 0;
    for (const auto& line : lines) {
        StoupSequent s = parse_stoup_sequent(line);
        SearchResult a = lce_prove(s);
        LESequent ls = lce_to_le_sequent(s);
        SearchResult b = le_prove(ls);
        bool decided = a.outcome != Outcome::BudgetExceeded && b.outcome != Outcome::BudgetExceeded;
        if (decided && a.outcome == b.outcome) ++agree;
        else r.fail(line + ": LCE " + str(a.outcome) + " vs LE " + str(b.outcome));
        if (!a.proved() || !b.proved()) continue;
        ++provable;
        ProofTree le = lce_to_le_proof(*a.proof);
        r.expect(check(Calculus::LE, le, {.allow_cuts = true}).valid, line + ": LCE->LE proof invalid");
        r.expect(sequent_equal(le.conclusion, Sequent{ls}), line + ": LCE->LE conclusion differs");
        ProofTree lce = le_to_lce_proof(*b.proof);
        r.expect(check(Calculus::LCE, lce, {.allow_cuts = true}).valid, line + ": LE->LCE proof invalid");
        run.to_eliminate.push_back(lce);
        ProofTree round = le_to_lce_proof(le);
        r.expect(check(Calculus::LCE, round, {.allow_cuts = true}).valid, line + ": round trip invalid");
        r.expect(sequent_equal(round.conclusion, Sequent{s}) || lce_prove(std::get<StoupSequent>(round.conclusion)).proved(),
                 line + ": round trip conclusion unprovable");
        run.to_eliminate.push_back(round);
    }
    r.notes << (r.ok ? "" : "; ") << agree << "/" << lines.size() << " agree, " << provable << " provable";
    return r;
}

// Extra cut-elimination inputs: first-order theorem items and generated sequents.
void widen_corpus(CorpusRun& run) {
    for (const char* f : {"(existsc x. a_i(x)) ->i ~(forall x. ~a_i(x))", "~(forall x. ~a_i(x)) ->i (existsc x. a_i(x))",
                          "(forall x. a_i(x)) ->i ~(existsc x. ~a_i(x))", "~(existsc x. ~a_c(x)) ->i forall x. a_c(x)"}) {
        SearchResult p = le_prove(le_goal(f));
        if (p.proved()) run.to_eliminate.push_back(le_to_lce_proof(*p.proof));
    }
    testing::Gen g(testing::base_seed() + 5);
    testing::Lang l;
    SearchBudget b;
    b.max_nodes = 20000;
    for (int found = 0, tries = 0; found < 100 && tries < 5000; ++tries) {
        LESequent s = lce_to_le_sequent(g.stoup_sequent(2, l));
        SearchResult p = le_prove(s, b);
        if (!p.proved()) continue;
        run.to_eliminate.push_back(le_to_lce_proof(*p.proof));
        ++found;
    }
}

bool lex_less(const std::pair<unsigned, std::size_t>& a, const std::pair<unsigned, std::size_t>& b) { return a < b; }

Report cut_elimination(const CorpusRun& run) {
    Report r;
    std::size_t cuts = 0, steps = 0;
    for (const auto& t : run.to_eliminate) {
        if (uses_rule(t, "Pcut") || uses_rule(t, "Ncut")) ++cuts;
        CutElimResult e = eliminate_cuts_traced(t);
        std::string name = render(t.conclusion);
        r.expect(cut_free_valid(Calculus::LCE, e.proof), name + ": result not a valid cut-free proof");
        r.expect(sequent_equal(e.proof.conclusion, t.conclusion), name + ": conclusion changed");
        for (const auto& m : e.trace) {
            ++steps;
            if (!lex_less(m.child, m.parent)) {
                r.fail(name + ": measure did not decrease");
                break;
            }
        }
    }
    r.notes << (r.ok ? "" : "; ") << run.to_eliminate.size() << " proofs (" << cuts << " with cuts), " << steps
            << " measured rewrites";
    return r;
}

// -- criterion 6 -----------------------------------------------------------

Report labeled_items() {
    Report r;
    for (const char* f : {"diac a_i ->i ~ box ~ a_i", "~ box ~ a_i ->i diac a_i", "box a_c ->i ~ diac ~ a_c",
                          "~ diac ~ a_c ->i box a_c"}) {
        SearchResult p = labek_prove(parse_labeled_sequent(std::string("|- ; x: (") + f + ")"));
        r.expect(p.proved() && cut_free_valid(Calculus::LabEK, *p.proof), std::string(f) + ": " + str(p.outcome));
        if (p.proved()) modal_theorems.push_back({parse_formula(f), {}});
    }
    std::string nd = "~ diai ~ a_i ->i box a_i";
    Outcome o = labek_prove(parse_labeled_sequent("|- ; x: (" + nd + ")")).outcome;
    r.expect(o == Outcome::Refuted, nd + ": " + str(o));
    auto cm = countermodel_search(parse_formula(nd), 3);
    r.expect(cm && cm->n <= 3, nd + ": no countermodel within 3 worlds");
    if (cm) r.notes << (r.ok ? "" : "; ") << "countermodel with " << cm->n << " worlds";
    return r;
}

// -- criterion 7 -----------------------------------------------------------

Report nested_items() {
    Report r;
    const std::vector<std::pair<std::string, std::string>> dual_proofs = {
        {"diamond_dual_i.proof", "!(~ box ~ a_i ->i diac a_i)"},
        {"diamond_dual_c.proof", "!(~ diai ~ (a_c) ->i box (a_c))"},
    };
    for (const auto& [file, s] : dual_proofs) {
        ProofTree golden = parse_proof(Calculus::NEK, testing::read_file(data_path(file)));
        r.expect(cut_free_valid(Calculus::NEK, golden), file + " does not check");
        SearchResult p = nek_prove(parse_nested_sequent(s));
        r.expect(p.proved(), s + ": " + str(p.outcome));
        if (!p.proved()) continue;
        r.expect(cut_free_valid(Calculus::NEK, *p.proof), s + ": found proof does not check");
        r.expect(serialize_proof(*p.proof) == serialize_proof(golden), s + ": found proof differs from " + file);
        modal_theorems.push_back({fm(parse_nested_sequent(s)), {}});
    }
    const std::vector<std::string> provable = {
        "box(a_i ->i b_i) ->i (box a_i ->i box b_i)",
        "box(a_i ->i b_i) ->i (diai a_i ->i diai b_i)",
        "diai(a_i \\/i b_i) ->i (diai a_i \\/i diai b_i)",
        "(diai a_i ->i box b_i) ->i box(a_i ->i b_i)",
        "diai bot ->i bot",
    };
    for (const auto& f : provable) {
        SearchResult p = nek_prove(parse_nested_sequent("!(" + f + ")"));
        r.expect(p.proved() && cut_free_valid(Calculus::NEK, *p.proof), f + ": " + str(p.outcome));
        if (p.proved()) modal_theorems.push_back({parse_formula(f), {}});
    }
    const std::vector<std::string> refuted = {
        "box(a_i ->c b_i) ->i (box a_i ->i box b_i)",
        "box(a_i ->c b_i) ->c (box a_i ->i box b_i)",
        "box(a_i ->c b_i) ->c (box a_i ->c box b_i)",
        "(diai a_i ->c box b_i) ->i box(a_i ->i b_i)",
    };
    for (const auto& f : refuted) {
        Outcome o = nek_prove(parse_nested_sequent("!(" + f + ")")).outcome;
        r.expect(o == Outcome::Refuted, f + ": " + str(o));
    }
    return r;
}

// -- criterion 8 -----------------------------------------------------------

Report extensions() {
    Report r;
    const std::vector<std::pair<std::string, std::string>> items = {
        {"t", "box p_i ->i p_i"},          {"t", "p_i ->i diai p_i"},          {"4", "box p_i ->i box box p_i"},
        {"b", "p_i ->i box diai p_i"},     {"5", "diai p_i ->i box diai p_i"},
    };
    for (const auto& [e, f] : items) {
        Extensions ext = ext_of(e);
        NestedSequent s = parse_nested_sequent("!(" + f + ")");
        SearchResult p = nek_prove(s, ext);
        CheckOptions o;
        o.ext = ext;
        r.expect(p.proved() && cut_free_valid(Calculus::NEK, *p.proof, o), "{" + e + "} " + f + ": " + str(p.outcome));
        if (p.proved()) modal_theorems.push_back({parse_formula(f), frame_of(ext)});
        Outcome plain = nek_prove(s).outcome;
        r.expect(plain == Outcome::Refuted, "{} " + f + ": " + str(plain));
        r.expect(countermodel_search(parse_formula(f), 3).has_value(), f + ": no countermodel on unrestricted frames");
        r.expect(!countermodel_search(parse_formula(f), 3, frame_of(ext)).has_value(),
                 f + ": countermodel on restricted frames");
    }
    return r;
}

// -- criterion 9 -----------------------------------------------------------

Report nested_labeled_agreement() {
    Report r;
    auto lines = testing::read_lines(data_path("nested_corpus.txt"));
    int agree = 0;
    for (const auto& line : lines) {
        NestedSequent s = parse_nested_sequent(line);
        SearchResult a = nek_prove(s);
        SearchResult b = labek_prove(nested_to_labeled(s));
        bool decided = a.outcome != Outcome::BudgetExceeded && b.outcome != Outcome::BudgetExceeded;
        if (decided && a.outcome == b.outcome) ++agree;
        else r.fail(line + ": nEK " + str(a.outcome) + " vs labEK " + str(b.outcome));
        if (a.proved()) {
            r.expect(cut_free_valid(Calculus::NEK, *a.proof), line + ": nEK proof invalid");
            NestedSequent closed = s;
            if (count_outputs(closed) == 0) closed.out = bot();
            modal_theorems.push_back({fm(closed), {}});
        }
        if (b.proved()) r.expect(cut_free_valid(Calculus::LabEK, *b.proof), line + ": labEK proof invalid");
    }
    r.notes << (r.ok ? "" : "; ") << agree << "/" << lines.size() << " agree";
    return r;
}

// -- criterion 10 ----------------------------------------------------------

Report soundness_harness() {
    Report r;
    std::size_t enumerated = 0, sampled = 0;
    std::uint64_t seed = testing::base_seed();
    for (const auto& [f, frame] : modal_theorems) {
        std::set<std::string> names = atom_names(f);
        std::vector<std::string> atoms(names.begin(), names.end());
        bool ok = true;
        enumerate_models(3, atoms, frame, [&](const Model& m) {
            ++enumerated;
            if (!is_valid_in_model(m, f)) ok = false;
            return ok;
        });
        r.expect(ok, render(f) + " fails in an enumerated model");
        if (atoms.empty()) atoms.push_back("p");
        for (int i = 0; i < 1000; ++i) {
            Model m = random_model(seed + 7919 * i, 1 + i % 5, frame, atoms);
            ++sampled;
            if (!is_valid_in_model(m, f)) {
                r.fail(render(f) + " fails in random model " + std::to_string(i));
                break;
            }
        }
    }
    r.notes << (r.ok ? "" : "; ") << modal_theorems.size() << " theorems, " << enumerated << " enumerated and "
            << sampled << " sampled model checks";
    return r;
}

// -- criterion 11 ----------------------------------------------------------

struct Suite {
    std::string name;
    int cases = 0, failures = 0;
    std::string first;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (!ok && failures++ == 0) first = what;
    }
};

RuleInstance make(const std::string& id, const Formula& f) {
    RuleInstance r;
    r.id = id;
    r.principal = f;
    return r;
}

std::vector<RuleInstance> lce_invertible_instances(const StoupSequent& s) {
    std::vector<RuleInstance> out;
    for (const auto& l : s.gamma)
        for (const char* id : {"andL", "oriL", "orcL", "Lc", "impcL", "negL"}) out.push_back(make(id, l.f));
    for (const auto& l : s.delta)
        for (const char* id : {"orcR", "impcR", "negR", "Rc", "D"}) out.push_back(make(id, l.f));
    if (s.stoup) {
        for (const char* id : {"andR", "impiR"}) out.push_back(make(id, s.stoup->f));
        RuleInstance st;
        st.id = "store";
        out.push_back(st);
    }
    return out;
}

void lce_invertibility(Suite& suite, testing::Gen& g) {
    testing::Lang l;
    while (suite.cases < 300) {
        StoupSequent s = g.stoup_sequent(2, l);
        if (!lce_prove(s).proved()) continue;
        for (const auto& r : lce_invertible_instances(s)) {
            std::vector<StoupSequent> ps;
            try {
                ps = lce_premises(r, s);
            } catch (const RuleError&) {
                continue;
            }
            bool ok = true;
            for (const auto& p : ps) ok = ok && lce_prove(p).proved();
            suite.record(ok, r.id + " on " + render(s));
        }
    }
}

void collect_paths(const NestedNode& n, NodePath& p, std::vector<NodePath>& out) {
    out.push_back(p);
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
        p.push_back(static_cast<int>(i));
        collect_paths(n.kids[i], p, out);
        p.pop_back();
    }
}

std::vector<RuleInstance> nek_invertible_instances(const NestedSequent& s) {
    std::vector<RuleInstance> out;
    std::vector<NodePath> paths;
    NodePath tmp;
    collect_paths(s, tmp, paths);
    for (const auto& p : paths) {
        const NestedNode& n = *node_at(s, p);
        auto add = [&](const char* id, const Formula& f, std::optional<NodePath> target = std::nullopt) {
            RuleInstance r = make(id, f);
            r.path = p;
            r.target = std::move(target);
            out.push_back(r);
        };
        for (const auto& f : n.left) {
            for (const char* id : {"andL", "oriL", "idiaL", "orcL", "impcL", "negL", "Lc", "cdiaL"}) add(id, f);
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                NodePath c = p;
                c.push_back(static_cast<int>(i));
                add("boxL", f, c);
            }
        }
        for (const auto& f : n.right) {
            for (const char* id : {"orcR", "impcR", "negR", "Rc", "D"}) add(id, f);
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                NodePath c = p;
                c.push_back(static_cast<int>(i));
                add("cdiaR", f, c);
            }
        }
        if (n.out) {
            for (const char* id : {"andR", "impiR", "boxR"}) add(id, *n.out);
            RuleInstance st;
            st.id = "store";
            st.path = p;
            out.push_back(st);
        }
    }
    return out;
}

void nek_invertibility(Suite& suite, testing::Gen& g) {
    testing::Lang l{true, true, false};
    SearchBudget b;
    b.max_labels = 4;
    while (suite.cases < 300) {
        NestedSequent s = g.nested_node(1, 1, l, true);
        if (!nek_prove(s, {}, Fragment::Full, b).proved()) continue;
        for (const auto& r : nek_invertible_instances(s)) {
            std::vector<NestedSequent> ps;
            try {
                ps = nek_premises(r, s, {});
            } catch (const RuleError&) {
                continue;
            }
            bool ok = true;
            for (const auto& p : ps) ok = ok && nek_prove(p, {}, Fragment::Full, b).proved();
            suite.record(ok, r.id + " on " + render(s));
        }
    }
}

void weakening_contraction(Suite& suite, testing::Gen& g) {
    testing::Lang l;
    while (suite.cases < 300) {
        StoupSequent s = g.stoup_sequent(2, l);
        if (!lce_prove(s).proved()) continue;
        StoupSequent w = s;
        for (int i = 1 + g.pick(2); i > 0; --i) add_unique(w.gamma, Labeled{"", g.formula(2, l)});
        for (int i = g.pick(2); i > 0; --i) add_unique(w.delta, Labeled{"", g.formula(2, l)});
        suite.record(lce_prove(w).proved(), "weakening of " + render(s) + " to " + render(w));
        StoupSequent c = s;
        if (!c.gamma.empty()) c.gamma.push_back(c.gamma.front());
        if (!c.delta.empty()) c.delta.push_back(c.delta.front());
        suite.record(lce_prove(c).proved(), "contraction image of " + render(s));
    }
}

void macro_expansion(Suite& suite, testing::Gen& g) {
    testing::Lang prop, fo{true, false, true};
    while (suite.cases < 300) {
        Formula a = g.formula(5, suite.cases % 2 ? fo : prop);
        if (a.kind() == Kind::Bottom) continue;
        StoupSequent s;
        s.gamma.push_back({"", a});
        if (g.coin()) s.gamma.push_back({"", g.formula(2, prop)});
        StoupSequent gi = s, gc = s;
        gi.stoup = Labeled{"", a};
        gc.delta.push_back({"", a});
        for (const auto& [t, what] : {std::pair{expand_ginit(gi, a), "ginit"}, {expand_gcinit(gc, a), "gcinit"}}) {
            bool ok = cut_free_valid(Calculus::LCE, t) && !uses_rule(t, "ginit") && !uses_rule(t, "gcinit");
            suite.record(ok, std::string(what) + " of " + render(a));
        }
    }
}

void parser_round_trip(Suite& suite, testing::Gen& g) {
    const testing::Lang langs[] = {{true, false, false}, {true, false, true}, {true, true, false}, {false, true, false}};
    while (suite.cases < 600) {
        const testing::Lang& l = langs[suite.cases % 4];
        Formula f = g.formula(6, l);
        std::string text = render(f);
        bool ok = false;
        try {
            ok = parse_formula(text) == f && !render(f, Format::Latex).empty();
        } catch (const ParseError&) {
        }
        suite.record(ok, text);
        if (l.modal) {
            NestedSequent n = g.nested_node(2, 2, l, g.coin());
            std::string nt = render(n);
            bool nok = false;
            try {
                nok = sequent_equal(parse_nested_sequent(nt), n);
            } catch (const ParseError&) {
            }
            suite.record(nok, nt);
        } else {
            StoupSequent s = g.stoup_sequent(3, l);
            std::string st = render(s);
            bool sok = false;
            try {
                sok = sequent_equal(parse_stoup_sequent(st), s);
            } catch (const ParseError&) {
            }
            suite.record(sok, st);
        }
    }
}

Formula raw_fm(const NestedNode& n) {
    Formula ante = top();
    std::vector<Formula> items;
    const NestedNode* full = nullptr;
    for (const auto& f : n.left) items.push_back(f);
    for (const auto& f : n.right) items.push_back(neg(f));
    for (const auto& k : n.kids) {
        if (count_outputs(k) > 0) full = &k;
        else items.push_back(dia_i(raw_fm(k)));
    }
    for (auto it = items.rbegin(); it != items.rend(); ++it) ante = conj(*it, ante);
    if (n.out) return imp_i(ante, *n.out);
    if (full) return imp_i(ante, box(raw_fm(*full)));
    return ante;
}

// a ⊤ that survived simplification: a conjunct or an antecedent
bool leftover_top(const Formula& f) {
    Kind k = f.kind();
    if (is_atom(k) || k == Kind::Bottom || k == Kind::Top) return false;
    if (k == Kind::And && (f.lhs().kind() == Kind::Top || f.rhs().kind() == Kind::Top)) return true;
    if (k == Kind::ImpI && f.lhs().kind() == Kind::Top) return true;
    if (is_binary(k)) return leftover_top(f.lhs()) || leftover_top(f.rhs());
    return leftover_top(f.body());
}

bool empty_tree(const NestedNode& n) {
    if (!n.left.empty() || !n.right.empty() || n.out) return false;
    for (const auto& k : n.kids)
        if (!empty_tree(k)) return false;
    return true;
}

void fm_simplification(Suite& suite, testing::Gen& g) {
    testing::Lang l{true, true, false};
    std::uint64_t seed = testing::base_seed() + 101;
    while (suite.cases < 300) {
        NestedSequent s = g.nested_node(2, 2, l, g.coin());
        if (empty_tree(s)) continue;
        Formula a = fm(s), b = raw_fm(s);
        bool ok = !leftover_top(a) && a.kind() != Kind::Top;
        for (int i = 0; i < 4 && ok; ++i) {
            Model m = random_model(seed++, 1 + g.pick(4), {}, {"a", "b", "c"});
            for (int w = 0; w < m.n && ok; ++w) ok = eval(m, w, a) == eval(m, w, b);
        }
        suite.record(ok, render(s));
    }
}

NestedContext random_context(testing::Gen& g, int depth) {
    testing::Lang l{true, true, false};
    NestedContext c;
    NestedNode* cur = &c.tree;
    for (int d = 0;; ++d) {
        NestedNode filler = g.nested_node(1, 1, l, false);
        cur->left = filler.left;
        cur->right = filler.right;
        for (int i = g.pick(2); i > 0; --i) cur->kids.push_back(g.nested_node(0, 1, l, false));
        if (d == depth) break;
        cur->kids.insert(cur->kids.begin(), NestedNode{});
        c.hole.push_back(0);
        cur = &cur->kids.front();
    }
    return c;
}

void merge_associativity(Suite& suite, testing::Gen& g) {
    while (suite.cases < 300) {
        int d = g.pick(4);
        NestedContext a = random_context(g, d), b = random_context(g, d), c = random_context(g, d);
        NestedContext x = merge(merge(a, b), c), y = merge(a, merge(b, c));
        suite.record(sequent_equal(x.tree, y.tree) && x.hole == y.hole, "depth " + std::to_string(d));
    }
}

// p_c ↦ ¬¬p_i, A∨cB ↦ ¬(¬A∧¬B), A→cB ↦ ¬(A∧¬B), ∃c ↦ ¬∀¬, ◇c ↦ ¬□¬
Formula dn_expand(const Formula& f) {
    switch (f.kind()) {
    case Kind::AtomC: return neg(neg(atom_i(f.name(), f.terms())));
    case Kind::AtomI:
    case Kind::Bottom:
    case Kind::Top: return f;
    case Kind::OrC: return neg(conj(neg(dn_expand(f.lhs())), neg(dn_expand(f.rhs()))));
    case Kind::ImpC: return neg(conj(dn_expand(f.lhs()), neg(dn_expand(f.rhs()))));
    case Kind::ExistsC: return neg(forall(f.name(), neg(dn_expand(f.body()))));
    case Kind::DiaC: return neg(box(neg(dn_expand(f.body()))));
    default:
        if (is_binary(f.kind())) return make_binary(f.kind(), dn_expand(f.lhs()), dn_expand(f.rhs()));
        if (is_quantifier(f.kind())) return make_quant(f.kind(), f.name(), dn_expand(f.body()));
        return make_unary(f.kind(), dn_expand(f.body()));
    }
}

unsigned classical_count(const Formula& f) {
    unsigned own = 0;
    switch (f.kind()) {
    case Kind::AtomC:
    case Kind::OrC:
    case Kind::ImpC:
    case Kind::ExistsC:
    case Kind::DiaC: own = 1; break;
    default: break;
    }
    if (is_atom(f.kind()) || f.kind() == Kind::Bottom || f.kind() == Kind::Top) return own;
    if (is_binary(f.kind())) return own + classical_count(f.lhs()) + classical_count(f.rhs());
    return own + classical_count(f.body());
}

void weight_agreement(Suite& suite, Suite& bound, testing::Gen& g) {
    testing::Lang l{true, true, false};
    while (suite.cases < 300) {
        Formula f = g.formula(4, l);
        unsigned ew = ecumenical_weight(f), expanded = ecumenical_weight(dn_expand(f));
        suite.record(ew == expanded, render(f) + " has weight " + std::to_string(ew) + ", its expansion " +
                                         std::to_string(expanded));
        bound.record(ew >= 4 * classical_count(f), render(f));
    }
}

Report property_suites() {
    Report r;
    testing::Gen g(testing::base_seed());
    std::vector<Suite> suites = {{"invertibility LCE"},     {"invertibility nEK"},
                                 {"weakening/contraction"}, {"ginit/gcinit expansion"},
                                 {"parser round trip"},     {"fm simplification"},
                                 {"merge associativity"},   {"ew vs double-negation expansion"},
                                 {"ew >= 4 x classical connectives"}};
    lce_invertibility(suites[0], g);
    nek_invertibility(suites[1], g);
    weakening_contraction(suites[2], g);
    macro_expansion(suites[3], g);
    parser_round_trip(suites[4], g);
    fm_simplification(suites[5], g);
    merge_associativity(suites[6], g);
    weight_agreement(suites[7], suites[8], g);
    for (const auto& s : suites) {
        r.notes << (&s == &suites.front() ? "" : "; ") << s.name << " " << s.cases - s.failures << "/" << s.cases;
        if (s.failures) {
            r.ok = false;
            r.notes << " (first failure: " << s.first << ")";
        }
    }
    return r;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    CorpusRun corpus;
    const std::vector<std::pair<std::string, std::function<Report()>>> criteria = {
        {"LE/LCE theorem items", theorem_items},
        {"weakened succedent", weakened_succedent},
        {"collapse guard", collapse_guard},
        {"LCE/LE corpus equivalence", [&] { return corpus_equivalence(corpus); }},
        {"cut elimination",
         [&] {
             widen_corpus(corpus);
             return cut_elimination(corpus);
         }},
        {"labEK duality and non-interdefinability", labeled_items},
        {"nEK axioms and refutations", nested_items},
        {"modal extensions", extensions},
        {"nested/labeled agreement", nested_labeled_agreement},
        {"soundness harness", soundness_harness},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = Clock::now();
        Report r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (!r.ok) ++failed;
        std::printf("criterion %zu: %s  %s [%.1fs] %s\n", i + 1, r.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                    r.notes.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
