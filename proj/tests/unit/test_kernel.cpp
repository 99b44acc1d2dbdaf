#include <doctest.h>

#include "ecumene/lce.hpp"
#include "ecumene/nek.hpp"
#include "ecumene/parser.hpp"
#include "ecumene/proof.hpp"
#include "support/gen.hpp"

using namespace ecumene;

namespace {

RuleInstance rule(std::string id, std::optional<Formula> p = std::nullopt) {
    RuleInstance r;
    r.id = std::move(id);
    r.principal = std::move(p);
    return r;
}

ProofTree leaf(Calculus c, const char* s, RuleInstance r) { return ProofTree{parse_sequent(c, s), std::move(r), {}}; }

}  // namespace

TEST_CASE("axiom trees") {
    CHECK(check(Calculus::LCE, leaf(Calculus::LCE, "p_i |- ; p_i", rule("init", atom_i("p")))).valid);
    CHECK(check(Calculus::LE, leaf(Calculus::LE, "p_i |- p_i", rule("init", atom_i("p")))).valid);
    CheckResult r = check(Calculus::LCE, leaf(Calculus::LCE, "q_i |- ; p_i", rule("init", atom_i("p"))));
    CHECK_FALSE(r.valid);
    CHECK(r.path.empty());
}

TEST_CASE("premises_of for D and store") {
    auto ps = premises_of(Calculus::LCE, rule("D", atom_i("p")), parse_sequent(Calculus::LCE, "|- p_i ; ."));
    REQUIRE(ps.size() == 1);
    CHECK(sequent_equal(ps[0], parse_sequent(Calculus::LCE, "|- p_i ; p_i")));
    CHECK_THROWS_AS(premises_of(Calculus::LCE, rule("D", atom_c("p")), parse_sequent(Calculus::LCE, "|- p_c ; .")),
                    RuleError);
    auto st = premises_of(Calculus::LCE, rule("store"), parse_sequent(Calculus::LCE, "|- ; ~a_i"));
    REQUIRE(st.size() == 1);
    CHECK(sequent_equal(st[0], parse_sequent(Calculus::LCE, "|- ~a_i ; .")));
    CHECK_THROWS_AS(premises_of(Calculus::LCE, rule("store"), parse_sequent(Calculus::LCE, "|- ; a_i")), RuleError);
}

TEST_CASE("cuts are rejected unless allowed") {
    ProofTree t{parse_sequent(Calculus::LCE, "p_i |- ; p_i"), rule("Pcut"), {}};
    t.rule.cut = atom_i("p");
    t.premises.push_back(leaf(Calculus::LCE, "p_i |- ; p_i", rule("init", atom_i("p"))));
    t.premises.push_back(leaf(Calculus::LCE, "p_i, p_i |- ; p_i", rule("init", atom_i("p"))));
    CHECK(check(Calculus::LCE, t, {.allow_cuts = true}).valid);
    CheckResult r = check(Calculus::LCE, t);
    CHECK_FALSE(r.valid);
    CHECK(r.reason.find("cut") != std::string::npos);
}

TEST_CASE("eigenvariable freshness") {
    RuleInstance r = rule("forallR", parse_formula("forall x. a_i(x)"));
    r.eigen = "y";
    CHECK_THROWS_AS(lce_premises(r, parse_stoup_sequent("b_i(y) |- ; forall x. a_i(x)")), RuleError);
    r.eigen = "z";
    CHECK(lce_premises(r, parse_stoup_sequent("b_i(y) |- ; forall x. a_i(x)")).size() == 1);
}

TEST_CASE("golden nested proofs check") {
    using testing::data_path;
    using testing::read_file;
    for (const char* f : {"diamond_dual_i.proof", "diamond_dual_c.proof"}) {
        ProofTree t = parse_proof(Calculus::NEK, read_file(data_path(f)));
        CHECK_MESSAGE(check(Calculus::NEK, t).valid, f);
        ProofTree bad = t;
        bad.premises.at(0).rule.id = "andL";
        CheckResult r = check(Calculus::NEK, bad);
        CHECK_FALSE(r.valid);
        CHECK(r.path == std::vector<int>{0});
    }
}

TEST_CASE("first violation path points into the tree") {
    SearchResult r = lce_prove(parse_stoup_sequent("a_i /\\ b_i |- ; b_i /\\ a_i"));
    REQUIRE(r.proved());
    ProofTree t = *r.proof;
    CHECK(check(Calculus::LCE, t).valid);
    ProofTree* p = &t;
    std::vector<int> path;
    while (!p->premises.empty()) {
        path.push_back(0);
        p = &p->premises[0];
    }
    p->rule.id = "andR";
    CheckResult c = check(Calculus::LCE, t);
    CHECK_FALSE(c.valid);
    CHECK(c.path == path);
}
