#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ecumene/labek.hpp"
#include "ecumene/lce.hpp"
#include "ecumene/nek.hpp"
#include "ecumene/parser.hpp"
#include "ecumene/semantics.hpp"

using namespace ecumene;

namespace {

enum Exit { Ok = 0, Negative = 1, Unknown = 2, InputError = 3 };

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::string text_or_stdin(const std::string& arg) { return arg.empty() ? read_stdin() : arg; }

std::string file_or_stdin(const std::string& path) {
    if (path.empty() || path == "-") return read_stdin();
    std::ifstream in(path);
    if (!in) throw InputFailure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

Extensions parse_ext(const std::string& s) {
    Extensions e;
    for (const auto& x : split(s)) {
        if (x == "t") e.t = true;
        else if (x == "b") e.b = true;
        else if (x == "4") e.four = true;
        else if (x == "5") e.five = true;
        else throw InputFailure("unknown extension " + x);
    }
    return e;
}

Fragment parse_fragment(const std::string& s) {
    if (s == "full") return Fragment::Full;
    if (s == "int") return Fragment::Intuitionistic;
    if (s == "cls") return Fragment::Classical;
    throw InputFailure("unknown fragment " + s);
}

FrameCondition parse_frame(const std::string& s) {
    FrameCondition c;
    for (const auto& x : split(s)) {
        if (x == "refl") c.reflexive = true;
        else if (x == "sym") c.symmetric = true;
        else if (x == "trans") c.transitive = true;
        else if (x == "eucl") c.euclidean = true;
        else throw InputFailure("unknown frame condition " + x);
    }
    return c;
}

Calculus parse_calculus(const std::string& s) {
    auto c = calculus_from_name(s);
    if (!c) throw InputFailure("unknown calculus " + s);
    return *c;
}

std::string path_text(const std::vector<int>& p) {
    if (p.empty()) return "root";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s;
}

struct ProveArgs {
    std::string calculus = "lce", ext, fragment = "full", format = "text", input;
    SearchBudget budget;
};

int cmd_prove(const ProveArgs& a) {
    Calculus c = parse_calculus(a.calculus);
    Extensions ext = parse_ext(a.ext);
    Fragment frag = parse_fragment(a.fragment);
    if (c != Calculus::NEK && (ext.any() || frag != Fragment::Full))
        throw InputFailure("--ext and --fragment apply to nek only");
    if (frag != Fragment::Full && ext.any()) throw InputFailure("extensions are only available in the full fragment");
    if (a.format != "text" && a.format != "latex") throw InputFailure("unknown format " + a.format);
    Sequent s = parse_sequent(c, trim(text_or_stdin(a.input)));
    SearchResult r;
    switch (c) {
    case Calculus::LE: r = le_prove(std::get<LESequent>(s), a.budget); break;
    case Calculus::LCE: r = lce_prove(std::get<StoupSequent>(s), a.budget); break;
    case Calculus::LabEK: r = labek_prove(std::get<StoupSequent>(s), a.budget); break;
    case Calculus::NEK: r = nek_prove(std::get<NestedSequent>(s), ext, frag, a.budget); break;
    }
    std::cerr << outcome_name(r.outcome) << " after " << r.nodes << " search nodes\n";
    if (r.proved()) {
        if (a.format == "latex") std::cout << render(*r.proof, Format::Latex) << "\n";
        else std::cout << serialize_proof(*r.proof);
        return Ok;
    }
    if (r.outcome == Outcome::Refuted) {
        std::cout << "refuted\n";
        return Negative;
    }
    std::cout << "unknown\n";
    return Unknown;
}

struct CheckArgs {
    std::string calculus = "lce", ext, fragment = "full", file;
    bool allow_cuts = false, printed = false;
};

int cmd_check(const CheckArgs& a) {
    Calculus c = parse_calculus(a.calculus);
    CheckOptions o;
    o.allow_cuts = a.allow_cuts;
    o.ext = parse_ext(a.ext);
    o.fragment = parse_fragment(a.fragment);
    o.printed_variants = a.printed;
    ProofTree t = parse_proof(c, file_or_stdin(a.file));
    CheckResult r = check(c, t, o);
    if (r.valid) {
        std::cout << "valid\n";
        return Ok;
    }
    std::cout << "invalid " << path_text(r.path) << "\n";
    std::cerr << r.reason << "\n";
    return Negative;
}

struct TranslateArgs {
    std::string what, input, world = "x", root = "x";
};

int cmd_translate(const TranslateArgs& a) {
    const std::string& w = a.what;
    if (w == "lce-to-le-seq") {
        std::cout << render(lce_to_le_sequent(parse_stoup_sequent(trim(text_or_stdin(a.input))))) << "\n";
    } else if (w == "lce-to-le-proof") {
        std::cout << serialize_proof(lce_to_le_proof(parse_proof(Calculus::LCE, file_or_stdin(a.input))));
    } else if (w == "le-to-lce-proof") {
        std::cout << serialize_proof(le_to_lce_proof(parse_proof(Calculus::LE, file_or_stdin(a.input))));
    } else if (w == "nested-to-labeled") {
        std::cout << render(nested_to_labeled(parse_nested_sequent(trim(text_or_stdin(a.input))), a.root)) << "\n";
    } else if (w == "fm") {
        std::cout << render(fm(parse_nested_sequent(trim(text_or_stdin(a.input))))) << "\n";
    } else if (w == "modal-to-fo") {
        std::cout << render(modal_to_fo(parse_formula(trim(text_or_stdin(a.input))), a.world)) << "\n";
    } else {
        throw InputFailure("unknown translation " + w);
    }
    return Ok;
}

struct CountermodelArgs {
    std::string input, frame, model;
    int max_worlds = 3;
};

int cmd_countermodel(const CountermodelArgs& a) {
    Formula f = parse_formula(trim(text_or_stdin(a.input)));
    if (has_quantifier(f)) throw InputFailure("countermodels are propositional only");
    if (!a.model.empty()) {
        Model m = parse_model(file_or_stdin(a.model));
        auto errs = validate_model(m);
        if (!errs.empty()) throw InputFailure("invalid model: " + errs.front());
        for (int w = 0; w < m.n; ++w)
            if (!eval(m, w, f)) {
                std::cerr << "formula fails at world " << w << "\n";
                std::cout << render_model(m);
                return Negative;
            }
        std::cerr << "formula holds at every world\n";
        return Ok;
    }
    if (a.max_worlds < 1) throw InputFailure("--max-worlds must be positive");
    auto m = countermodel_search(f, a.max_worlds, parse_frame(a.frame));
    if (!m) {
        std::cerr << "no countermodel with at most " << a.max_worlds << " worlds\n";
        return Unknown;
    }
    std::cout << render_model(*m);
    return Negative;
}

int cmd_cutelim(const std::string& file) {
    ProofTree t = parse_proof(Calculus::LCE, file_or_stdin(file));
    CheckOptions o;
    o.allow_cuts = true;
    CheckResult in = check(Calculus::LCE, t, o);
    if (!in.valid) throw InputFailure("input proof is invalid at " + path_text(in.path) + ": " + in.reason);
    CutElimResult r = eliminate_cuts_traced(t);
    std::cerr << r.reductions << " reduction steps\n";
    std::cout << serialize_proof(r.proof);
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ecumene: proof search, checking and translation for ecumenical sequent calculi"};
    app.require_subcommand(1);

    ProveArgs pa;
    auto* prove = app.add_subcommand("prove", "search for a cut-free proof");
    prove->add_option("sequent", pa.input, "sequent text (read from stdin when absent)");
    prove->add_option("--calculus", pa.calculus, "le, lce, labek or nek")->capture_default_str();
    prove->add_option("--ext", pa.ext, "modal extensions, e.g. t,4");
    prove->add_option("--fragment", pa.fragment, "full, int or cls")->capture_default_str();
    prove->add_option("--budget-depth", pa.budget.max_depth, "maximum branch depth")->capture_default_str();
    prove->add_option("--budget-terms", pa.budget.max_terms, "witness term budget")->capture_default_str();
    prove->add_option("--budget-labels", pa.budget.max_labels, "fresh labels or nodes per branch")->capture_default_str();
    prove->add_option("--format", pa.format, "text or latex")->capture_default_str();

    CheckArgs ca;
    auto* chk = app.add_subcommand("check", "check a serialized proof");
    chk->add_option("file", ca.file, "proof file (stdin when absent or -)");
    chk->add_option("--calculus", ca.calculus, "le, lce, labek or nek")->capture_default_str();
    chk->add_flag("--allow-cuts", ca.allow_cuts, "accept cut rules");
    chk->add_option("--ext", ca.ext, "modal extensions");
    chk->add_option("--fragment", ca.fragment, "full, int or cls")->capture_default_str();
    chk->add_flag("--printed-variants", ca.printed, "accept the printed classical 4 rule");

    TranslateArgs ta;
    auto* tr = app.add_subcommand("translate", "translate sequents, proofs or formulas");
    tr->add_option("input", ta.input, "sequent or formula text, or proof file");
    tr->add_option("--what", ta.what,
                   "lce-to-le-seq, lce-to-le-proof, le-to-lce-proof, nested-to-labeled, fm or modal-to-fo")
        ->required();
    tr->add_option("--world", ta.world, "world variable for modal-to-fo")->capture_default_str();
    tr->add_option("--root", ta.root, "root label for nested-to-labeled")->capture_default_str();

    CountermodelArgs ma;
    auto* cm = app.add_subcommand("countermodel", "search for a finite Kripke countermodel");
    cm->add_option("formula", ma.input, "formula text (stdin when absent)");
    cm->add_option("--max-worlds", ma.max_worlds, "largest model size")->capture_default_str();
    cm->add_option("--frame", ma.frame, "frame conditions: refl,sym,trans,eucl");
    cm->add_option("--model", ma.model, "evaluate in the model read from this file instead of searching");

    std::string ce_file;
    auto* ce = app.add_subcommand("cutelim", "eliminate cuts from an LCE proof");
    ce->add_option("file", ce_file, "proof file (stdin when absent or -)");

    // sequents may start with '-' (a right input), so unmatched arguments are taken as the input text
    for (auto* sub : {prove, chk, tr, cm, ce}) sub->allow_extras();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }
    for (auto [sub, slot] : {std::pair{prove, &pa.input}, {chk, &ca.file}, {tr, &ta.input}, {cm, &ma.input},
                             {ce, &ce_file}}) {
        if (!*sub) continue;
        auto extra = sub->remaining();
        std::erase(extra, std::string("--"));
        if (extra.empty()) break;
        if (extra.size() > 1 || !slot->empty()) {
            std::cerr << "error: unexpected argument " << extra.back() << "\n";
            return InputError;
        }
        *slot = extra.front();
    }

    try {
        if (*prove) return cmd_prove(pa);
        if (*chk) return cmd_check(ca);
        if (*tr) return cmd_translate(ta);
        if (*cm) return cmd_countermodel(ma);
        if (*ce) return cmd_cutelim(ce_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const RuleError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
    }
    return InputError;
}
