#pragma once

#include <functional>

#include "ecumene/formula.hpp"

namespace ecumene::detail {

using Has = std::function<bool(const Formula&)>;

// Copy rules skip an instance that the context already derives through the
// residue of a rule that consumed it (e.g. p_i left behind by Lc).
inline bool covered_left(const Formula& a, const Has& in_l, const Has& in_r) {
    if (in_l(a)) return true;
    switch (a.kind()) {
    case Kind::Top: return true;
    case Kind::AtomC: return in_l(atom_i(a.name(), a.terms()));
    case Kind::And: return covered_left(a.lhs(), in_l, in_r) && covered_left(a.rhs(), in_l, in_r);
    case Kind::OrI:
    case Kind::OrC: return covered_left(a.lhs(), in_l, in_r) || covered_left(a.rhs(), in_l, in_r);
    case Kind::ImpI:
    case Kind::ImpC: return covered_left(a.rhs(), in_l, in_r);
    default: return false;
    }
}

inline bool covered_right(const Formula& a, const Has& in_l, const Has& in_r) {
    if (in_r(a)) return true;
    switch (a.kind()) {
    case Kind::Bottom: return true;
    case Kind::AtomC: return in_r(atom_i(a.name(), a.terms()));
    case Kind::OrC: return covered_right(a.lhs(), in_l, in_r) && covered_right(a.rhs(), in_l, in_r);
    case Kind::ImpC: return covered_left(a.lhs(), in_l, in_r) && covered_right(a.rhs(), in_l, in_r);
    case Kind::Neg: return covered_left(a.body(), in_l, in_r);
    default: return false;
    }
}

}  // namespace ecumene::detail
