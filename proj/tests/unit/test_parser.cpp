#include <doctest.h>

#include "ecumene/parser.hpp"
#include "ecumene/proof.hpp"

using namespace ecumene;

TEST_CASE("formula syntax and precedence") {
    CHECK(parse_formula("~~a_i ->c a_i") == imp_c(neg(neg(atom_i("a"))), atom_i("a")));
    CHECK(parse_formula("box (p_i ->i q_i)") == box(imp_i(atom_i("p"), atom_i("q"))));
    CHECK(parse_formula("a_i /\\ b_i ->i c_i") == imp_i(conj(atom_i("a"), atom_i("b")), atom_i("c")));
    CHECK(parse_formula("a_i ->i b_i ->i c_i") == imp_i(atom_i("a"), imp_i(atom_i("b"), atom_i("c"))));
    CHECK(parse_formula("a_i \\/i b_i \\/c c_i") == disj_c(disj_i(atom_i("a"), atom_i("b")), atom_i("c")));
    CHECK(parse_formula("forall x. a_i(x) ->i b_i") == forall("x", imp_i(atom_i("a", {Term::var("x")}), atom_i("b"))));
    CHECK(parse_formula("q_c(x, f(y))") == atom_c("q", {Term::var("x"), Term::fn("f", {Term::var("y")})}));
    CHECK(parse_formula("top").kind() == Kind::Top);
    CHECK(parse_formula("bot").kind() == Kind::Bottom);
}

TEST_CASE("formula parse errors carry spans") {
    for (const char* bad : {"a_i /\\", "p", "forall x.", "a_i ->x b_i", "(a_i", "a_i(x) /\\ a_i(x, y)"}) {
        std::string text = bad;
        bool threw = false;
        try {
            parse_formula(text);
        } catch (const ParseError& e) {
            threw = true;
            CHECK(e.span.start <= e.span.end);
            CHECK(e.span.end <= text.size());
        }
        CHECK_MESSAGE(threw, text);
    }
}

TEST_CASE("stoup sequents") {
    StoupSequent s = parse_stoup_sequent("p_i |- ; p_i");
    CHECK(s.gamma.size() == 1);
    CHECK(s.delta.empty());
    REQUIRE(s.stoup);
    CHECK(s.stoup->f == atom_i("p"));
    StoupSequent t = parse_stoup_sequent("|- a_c, b_c ; .");
    CHECK(t.gamma.empty());
    CHECK(t.delta.size() == 2);
    CHECK_FALSE(t.stoup);
    CHECK_THROWS_AS(parse_stoup_sequent("p_i, q_i |- ; . ; r_i"), ParseError);
    CHECK_THROWS_AS(parse_stoup_sequent("|- ; a_i, b_i"), ParseError);
    CHECK(render(t).ends_with("; ."));
}

TEST_CASE("LE sequents") {
    LESequent s = parse_le_sequent("a_i, ~b_i |- c_i");
    CHECK(s.gamma.size() == 2);
    CHECK(s.succ == atom_i("c"));
    CHECK(parse_le_sequent("|- bot").succ.kind() == Kind::Bottom);
}

TEST_CASE("nested sequents") {
    NestedSequent s = parse_nested_sequent("-diac a_i, [ !~b_i ], [ +a_i /\\ b_i ]");
    CHECK(s.right.size() == 1);
    CHECK(s.kids.size() == 2);
    REQUIRE(s.kids[0].out);
    CHECK(*s.kids[0].out == neg(atom_i("b")));
    CHECK(s.kids[1].left.size() == 1);
    CHECK(count_outputs(s) == 1);
    NestedSequent one = parse_nested_sequent("!p_i ->i p_i");
    CHECK(one.kids.empty());
    CHECK(one.out);
    CHECK_THROWS_AS(parse_nested_sequent("!a_i, [ !b_i ]"), ParseError);
    CHECK(count_outputs(parse_nested_sequent("+a_i")) == 0);
}

TEST_CASE("labeled sequents") {
    StoupSequent s = parse_labeled_sequent("R(x,y), x:box p_i |- ; y:p_i");
    CHECK(s.rel.size() == 1);
    CHECK(s.gamma.size() == 1);
    REQUIRE(s.stoup);
    CHECK(s.stoup->label == "y");
    StoupSequent t = parse_labeled_sequent("x: diac p_i |- x: diac p_i ; .");
    CHECK(t.delta.size() == 1);
    CHECK_THROWS_AS(parse_labeled_sequent("x:p_i |- y:q_i ; z:r_i ; w:s_i"), ParseError);
    CHECK_THROWS_AS(parse_labeled_sequent("p_i |- ; x:p_i"), ParseError);
}

TEST_CASE("rendering") {
    CHECK(render(parse_formula("~~a_i ->c a_i")) == "~~a_i ->c a_i");
    ProofTree t{Sequent{parse_stoup_sequent("p_i |- ; p_i")}, RuleInstance{}, {}};
    t.rule.id = "init";
    t.rule.principal = atom_i("p");
    CHECK(render(t, Format::Latex).find("init") != std::string::npos);
    CHECK(render(parse_formula("box a_i"), Format::Latex).find("\\Box") != std::string::npos);
}

TEST_CASE("proof serialization round trip") {
    ProofTree t{Sequent{parse_stoup_sequent("p_i |- ; p_i")}, RuleInstance{}, {}};
    t.rule.id = "init";
    t.rule.principal = atom_i("p");
    ProofTree u = parse_proof(Calculus::LCE, serialize_proof(t));
    CHECK(serialize_proof(u) == serialize_proof(t));
    CHECK_THROWS_AS(parse_proof(Calculus::LCE, "(init {p=\"p_i\"} \"p_i |- ; p_i\""), ParseError);
}
