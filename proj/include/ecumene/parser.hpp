#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ecumene/formula.hpp"
#include "ecumene/proof.hpp"
#include "ecumene/sequent.hpp"

namespace ecumene {

struct Span {
    std::size_t start = 0, end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(Span s, const std::string& msg)
        : std::runtime_error(msg + " at " + std::to_string(s.start) + ".." + std::to_string(s.end)),
          span(s), message(msg) {}
    Span span;
    std::string message;
};

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
LESequent parse_le_sequent(std::string_view text);
StoupSequent parse_stoup_sequent(std::string_view text);
LabeledSequent parse_labeled_sequent(std::string_view text);
NestedSequent parse_nested_sequent(std::string_view text);
Sequent parse_sequent(Calculus c, std::string_view text);

enum class Format { Text, Latex };

std::string render(const Term& t);
std::string render(const Formula& f, Format fmt = Format::Text);
std::string render(const LESequent& s, Format fmt = Format::Text);
std::string render(const StoupSequent& s, Format fmt = Format::Text);
std::string render(const NestedSequent& s, Format fmt = Format::Text);
std::string render(const Sequent& s, Format fmt = Format::Text);
std::string render(const ProofTree& t, Format fmt = Format::Text);

}  // namespace ecumene
