#include <stdexcept>

#include "ecumene/labek.hpp"

namespace ecumene {

namespace {

std::string bound_name(int depth, const std::string& avoid) {
    for (int i = depth;; ++i) {
        std::string y = i == 0 ? "y" : "y" + std::to_string(i);
        if (y != avoid) return y;
    }
}

Formula st(const Formula& f, const std::string& x, int depth, const std::string& root) {
    Term at = Term::var(x);
    switch (f.kind()) {
    case Kind::AtomI: return atom_i(f.name(), {at});
    case Kind::AtomC: return atom_c(f.name(), {at});
    case Kind::Bottom:
    case Kind::Top: return f;
    case Kind::Neg: return neg(st(f.body(), x, depth, root));
    case Kind::Box:
    case Kind::DiaI:
    case Kind::DiaC: {
        std::string y = bound_name(depth, root);
        Formula r = atom_i("rel", {at, Term::var(y)});
        Formula a = st(f.body(), y, depth + 1, root);
        if (f.kind() == Kind::Box) return forall(y, imp_i(r, a));
        return make_quant(f.kind() == Kind::DiaI ? Kind::ExistsI : Kind::ExistsC, y, conj(r, a));
    }
    default:
        if (is_binary(f.kind()))
            return make_binary(f.kind(), st(f.lhs(), x, depth, root), st(f.rhs(), x, depth, root));
        throw std::invalid_argument("modal translation expects a propositional modal formula");
    }
}

}  // namespace

Formula modal_to_fo(const Formula& f, const std::string& x) { return st(f, x, 0, x); }

}  // namespace ecumene
