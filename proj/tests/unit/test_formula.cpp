#include <doctest.h>

#include "ecumene/formula.hpp"
#include "ecumene/parser.hpp"

using namespace ecumene;

namespace {
Formula P(const char* s) { return parse_formula(s); }
}

TEST_CASE("polarity follows the top connective") {
    CHECK(polarity(atom_c("p")) == Polarity::Negative);
    CHECK(polarity(atom_i("p")) == Polarity::Positive);
    CHECK(polarity(neg(atom_i("p"))) == Polarity::Negative);
    CHECK(polarity(dia_i(atom_c("p"))) == Polarity::Positive);
    CHECK(polarity(bot()) == Polarity::Negative);
    CHECK(polarity(dia_c(atom_i("p"))) == Polarity::Negative);
    CHECK(polarity(box(atom_c("p"))) == Polarity::Positive);
    CHECK(polarity(P("a_i ->c b_i")) == Polarity::Negative);
    CHECK(polarity(P("existsc x. a_i(x)")) == Polarity::Negative);
    CHECK(polarity(P("forall x. a_c(x)")) == Polarity::Positive);
}

TEST_CASE("externally classical and eec grammars") {
    CHECK(is_externally_classical(imp_c(atom_i("a"), atom_i("b"))));
    CHECK_FALSE(is_externally_classical(conj(atom_c("a"), atom_c("b"))));
    CHECK(is_externally_classical(bot()));
    CHECK(is_eec(neg(disj_i(atom_i("a"), atom_i("b")))));
    CHECK_FALSE(is_eec(imp_i(atom_c("a"), atom_i("b"))));
    CHECK(is_eec(P("forall x. a_i(x) ->c b_i(x)")));
    CHECK(is_eec(P("box a_c")));
    CHECK(is_externally_classical(P("diac a_i")));
    CHECK_FALSE(is_eec(P("box a_i")));
}

TEST_CASE("ecumenical weight") {
    CHECK(ecumenical_weight(atom_c("p")) == 4);
    CHECK(ecumenical_weight(imp_i(atom_i("a"), atom_i("b"))) == 1);
    CHECK(ecumenical_weight(dia_c(neg(atom_i("p")))) == 5);
    CHECK(ecumenical_weight(top()) == 0);
    CHECK(ecumenical_weight(bot()) == 0);
    CHECK(ecumenical_weight(P("a_i ->c b_c")) == 8);
    CHECK(ecumenical_weight(P("existsc x. a_i(x)")) == 4);
    CHECK(ecumenical_weight(P("forall x. ~a_i(x)")) == 2);
}

TEST_CASE("capture-avoiding substitution") {
    Formula f = P("forall y. r_i(x, y)");
    Formula g = substitute(f, "x", Term::var("y"));
    REQUIRE(g.kind() == Kind::ForAll);
    CHECK(g.name() != "y");
    CHECK(free_vars(g) == std::set<std::string>{"y"});
    CHECK(g == P("forall z. r_i(y, z)"));
    CHECK(substitute(P("p_i(x)"), "x", Term::var("c")) == P("p_i(c)"));
    CHECK(substitute(bot(), "x", Term::var("c")) == bot());
    CHECK(substitute(P("q_i(z)"), "x", Term::var("c")) == P("q_i(z)"));
}

TEST_CASE("free variables and fresh names") {
    CHECK(free_vars(P("forall x. r_i(x, y)")) == std::set<std::string>{"y"});
    CHECK(fresh_var({"y0", "y1"}) == "y2");
    CHECK(free_vars(bot()).empty());
}

TEST_CASE("alpha-equivalence is formula equality") {
    CHECK(P("forall x. a_i(x)") == P("forall z. a_i(z)"));
    CHECK(P("existsc x. forall y. r_i(x, y)") == P("existsc u. forall v. r_i(u, v)"));
    CHECK(P("forall x. r_i(x, y)") != P("forall y. r_i(y, y)"));
    CHECK(alpha_normalize(alpha_normalize(P("forall x. a_i(x)"))) == alpha_normalize(P("forall x. a_i(x)")));
}
