#include <doctest.h>

#include "ecumene/parser.hpp"
#include "ecumene/semantics.hpp"
#include "support/gen.hpp"

using namespace ecumene;

namespace {

// Direct reading of the satisfaction clauses, one world at a time.
bool sat(const Model& m, int w, const Formula& f) {
    auto every_up = [&](auto pred) {
        for (int v = 0; v < m.n; ++v)
            if (m.le[w][v] && !pred(v)) return false;
        return true;
    };
    auto no_up = [&](const Formula& a) { return every_up([&](int v) { return !sat(m, v, a); }); };
    switch (f.kind()) {
    case Kind::AtomI: return m.val[w].count(f.name()) > 0;
    case Kind::AtomC: return sat(m, w, neg(neg(atom_i(f.name()))));
    case Kind::Bottom: return false;
    case Kind::Top: return true;
    case Kind::And: return sat(m, w, f.lhs()) && sat(m, w, f.rhs());
    case Kind::OrI: return sat(m, w, f.lhs()) || sat(m, w, f.rhs());
    case Kind::OrC: return sat(m, w, neg(conj(neg(f.lhs()), neg(f.rhs()))));
    case Kind::ImpI: return every_up([&](int v) { return !sat(m, v, f.lhs()) || sat(m, v, f.rhs()); });
    case Kind::ImpC: return sat(m, w, neg(conj(f.lhs(), neg(f.rhs()))));
    case Kind::Neg: return no_up(f.body());
    case Kind::Box:
        return every_up([&](int v) {
            for (int u = 0; u < m.n; ++u)
                if (m.rel[v][u] && !sat(m, u, f.body())) return false;
            return true;
        });
    case Kind::DiaI:
        for (int u = 0; u < m.n; ++u)
            if (m.rel[w][u] && sat(m, u, f.body())) return true;
        return false;
    case Kind::DiaC: return sat(m, w, neg(box(neg(f.body()))));
    default: throw std::invalid_argument("quantifier");
    }
}

Model chain(int n) {
    Model m = Model::empty(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.le[i][j] = true;
    return m;
}

}  // namespace

TEST_CASE("model validation") {
    CHECK(validate_model(Model::empty(1)).empty());
    Model m = chain(2);
    m.val[0].insert("p");
    auto v = validate_model(m);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].find("monotone") != std::string::npos);

    Model f1 = Model::empty(3);
    f1.le[1][2] = true;
    f1.rel[0][1] = true;
    auto e = validate_model(f1);
    REQUIRE_FALSE(e.empty());
    CHECK(e[0].find("F1") != std::string::npos);
}

TEST_CASE("evaluation") {
    Model m = chain(2);
    m.val[1].insert("p");
    Formula nnp = parse_formula("~~p_i");
    CHECK(sat(m, 0, nnp));
    CHECK(eval(m, 0, nnp) == sat(m, 0, nnp));
    CHECK_FALSE(eval(m, 0, parse_formula("p_i")));
    CHECK(eval(m, 0, parse_formula("p_c")));
    CHECK_FALSE(eval(m, 0, bot()));
    CHECK(eval(m, 0, top()));
    Model r = Model::empty(1);
    r.rel[0][0] = true;
    r.val[0].insert("p");
    CHECK(eval(r, 0, parse_formula("box p_i")));
    CHECK_THROWS_AS(eval(r, 0, parse_formula("forall x. p_i(x)")), std::invalid_argument);
}

TEST_CASE("engine agrees with the clause oracle") {
    testing::Gen g(testing::base_seed() + 7);
    testing::Lang l{true, true, false};
    for (int i = 0; i < 300; ++i) {
        Model m = random_model(testing::base_seed() + i, 1 + g.pick(4), {}, {"a", "b", "c"});
        REQUIRE(validate_model(m).empty());
        Formula f = g.formula(4, l);
        for (int w = 0; w < m.n; ++w) REQUIRE_MESSAGE(eval(m, w, f) == sat(m, w, f), render(f));
    }
}

TEST_CASE("persistence and duality on sampled models") {
    testing::Gen g(testing::base_seed() + 11);
    testing::Lang l{true, true, false};
    for (int i = 0; i < 500; ++i) {
        Model m = random_model(testing::base_seed() * 31 + i, 1 + g.pick(4), {}, {"a", "b", "c"});
        Formula f = g.formula(3, l);
        for (int w = 0; w < m.n; ++w) {
            CHECK(eval(m, w, dia_c(f)) == eval(m, w, neg(box(neg(f)))));
            for (int v = 0; v < m.n; ++v)
                if (m.le[w][v] && eval(m, w, f)) REQUIRE_MESSAGE(eval(m, v, f), render(f));
        }
    }
}

TEST_CASE("countermodel search") {
    auto cm = countermodel_search(parse_formula("~~p_i ->i p_i"), 2);
    REQUIRE(cm);
    CHECK(cm->n == 2);
    CHECK_FALSE(is_valid_in_model(*cm, parse_formula("~~p_i ->i p_i")));
    CHECK_FALSE(countermodel_search(parse_formula("~box ~p_i ->i diac p_i"), 3));
    FrameCondition refl;
    refl.reflexive = true;
    CHECK_FALSE(countermodel_search(parse_formula("box p_i ->i p_i"), 2, refl));
    CHECK(countermodel_search(parse_formula("box p_i ->i p_i"), 2));
}

TEST_CASE("frame filters") {
    FrameCondition c;
    c.transitive = true;
    c.symmetric = true;
    int count = 0;
    enumerate_models(2, {"p"}, c, [&](const Model& m) {
        CHECK(satisfies_frame(m, c));
        CHECK(validate_model(m).empty());
        ++count;
        return true;
    });
    CHECK(count > 0);
}

TEST_CASE("random models") {
    Model one = random_model(5, 1);
    CHECK(one.n == 1);
    CHECK(validate_model(one).empty());
    CHECK(render_model(random_model(42, 3)) == render_model(random_model(42, 3)));
    FrameCondition e;
    e.euclidean = true;
    for (std::uint64_t s = 0; s < 50; ++s) {
        Model m = random_model(s, 3, e);
        CHECK(validate_model(m).empty());
        CHECK(satisfies_frame(m, e));
    }
}

TEST_CASE("model text round trip") {
    Model m = random_model(9, 3);
    CHECK(render_model(parse_model(render_model(m))) == render_model(m));
    CHECK_THROWS_AS(parse_model("le 0 1\n"), std::invalid_argument);
}
