#include <sstream>

#include <doctest.h>

#include "ecumene/labek.hpp"
#include "ecumene/lce.hpp"
#include "ecumene/nek.hpp"
#include "ecumene/parser.hpp"
#include "support/gen.hpp"

using namespace ecumene;

namespace {

SearchResult run(const std::string& calc, const std::string& seq) {
    std::string base = calc.substr(0, calc.find('+'));
    if (base == "le") return le_prove(parse_le_sequent(seq));
    if (base == "lce") return lce_prove(parse_stoup_sequent(seq));
    if (base == "labek") return labek_prove(parse_labeled_sequent(seq));
    Extensions e;
    if (auto plus = calc.find('+'); plus != std::string::npos)
        for (char c : calc.substr(plus + 1)) {
            e.t |= c == 't';
            e.b |= c == 'b';
            e.four |= c == '4';
            e.five |= c == '5';
        }
    return nek_prove(parse_nested_sequent(seq), e);
}

}  // namespace

TEST_CASE("golden provability expectations") {
    auto lines = testing::read_lines(testing::data_path("expect.txt"));
    REQUIRE(lines.size() >= 30);
    for (const auto& line : lines) {
        std::istringstream in(line);
        std::string tag, want, calc, seq;
        in >> tag >> want >> calc;
        std::getline(in >> std::ws, seq);
        CAPTURE(line);
        REQUIRE(tag == "EXPECT");
        SearchResult r = run(calc, seq);
        if (want == "provable") CHECK(r.outcome == Outcome::Proved);
        else CHECK(r.outcome == Outcome::Refuted);
    }
}
