#include "ecumene/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ecumene {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

// Truth sets: bit w of the result says whether w satisfies the subformula.
struct Evaluator {
    const Model& m;
    std::vector<Mask> up, succ;  // ≤-successors and R-successors of each world
    Mask all;
    std::unordered_map<std::string, Mask> memo;

    explicit Evaluator(const Model& model) : m(model), up(model.n), succ(model.n) {
        if (m.n > 64) throw std::invalid_argument("models are limited to 64 worlds");
        all = m.n == 64 ? ~Mask{0} : bit(m.n) - 1;
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) {
                if (m.le[i][j]) up[i] |= bit(j);
                if (m.rel[i][j]) succ[i] |= bit(j);
            }
    }

    Mask forall_up(Mask ok) const {
        Mask r = 0;
        for (int w = 0; w < m.n; ++w)
            if ((up[w] & ~ok) == 0) r |= bit(w);
        return r;
    }
    Mask negate(Mask a) const { return forall_up(all & ~a); }
    Mask imp(Mask a, Mask b) const { return forall_up((all & ~a) | b); }
    Mask boxed(Mask a) const {
        Mask ok = 0;
        for (int w = 0; w < m.n; ++w)
            if ((succ[w] & ~a) == 0) ok |= bit(w);
        return forall_up(ok);
    }

    Mask atom(const std::string& p) const {
        Mask r = 0;
        for (int w = 0; w < m.n; ++w)
            if (m.val[w].count(p)) r |= bit(w);
        return r;
    }

    Mask operator()(const Formula& f) {
        auto it = memo.find(f.key());
        if (it != memo.end()) return it->second;
        Mask r = compute(f);
        memo.emplace(f.key(), r);
        return r;
    }

    Mask compute(const Formula& f) {
        switch (f.kind()) {
        case Kind::AtomI:
        case Kind::AtomC: {
            if (!f.terms().empty()) throw std::invalid_argument("first-order evaluation unsupported");
            Mask p = atom(f.name());
            return f.kind() == Kind::AtomI ? p : negate(negate(p));
        }
        case Kind::Bottom: return 0;
        case Kind::Top: return all;
        case Kind::And: return (*this)(f.lhs()) & (*this)(f.rhs());
        case Kind::OrI: return (*this)(f.lhs()) | (*this)(f.rhs());
        case Kind::OrC: return negate(negate((*this)(f.lhs())) & negate((*this)(f.rhs())));
        case Kind::ImpI: return imp((*this)(f.lhs()), (*this)(f.rhs()));
        case Kind::ImpC: return negate((*this)(f.lhs()) & negate((*this)(f.rhs())));
        case Kind::Neg: return negate((*this)(f.body()));
        case Kind::Box: return boxed((*this)(f.body()));
        case Kind::DiaI: {
            Mask a = (*this)(f.body()), r = 0;
            for (int w = 0; w < m.n; ++w)
                if (succ[w] & a) r |= bit(w);
            return r;
        }
        case Kind::DiaC: return negate(boxed(negate((*this)(f.body()))));
        default: throw std::invalid_argument("first-order evaluation unsupported");
        }
    }
};

std::string world_pair(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void check_shape(const Model& m) {
    auto square = [&](const std::vector<std::vector<bool>>& r) {
        if (static_cast<int>(r.size()) != m.n) return false;
        for (const auto& row : r)
            if (static_cast<int>(row.size()) != m.n) return false;
        return true;
    };
    if (m.n < 1 || !square(m.le) || !square(m.rel) || static_cast<int>(m.val.size()) != m.n)
        throw std::invalid_argument("model relations do not match the number of worlds");
}

// F1 and F2 only; the order and valuation are checked separately
bool coherent(const Model& m) {
    int n = m.n;
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            if (!m.rel[w][v]) continue;
            for (int v2 = 0; v2 < n; ++v2) {
                if (!m.le[v][v2]) continue;
                bool ok = false;
                for (int w2 = 0; w2 < n && !ok; ++w2) ok = m.le[w][w2] && m.rel[w2][v2];
                if (!ok) return false;
            }
            for (int w2 = 0; w2 < n; ++w2) {
                if (!m.le[w][w2]) continue;
                bool ok = false;
                for (int v2 = 0; v2 < n && !ok; ++v2) ok = m.rel[w2][v2] && m.le[v][v2];
                if (!ok) return false;
            }
        }
    return true;
}

bool close_frame(Model& m, const FrameCondition& c) {
    bool changed = false, pass = true;
    int n = m.n;
    auto add = [&](int i, int j) {
        if (!m.rel[i][j]) m.rel[i][j] = pass = changed = true;
    };
    while (pass) {
        pass = false;
        for (int i = 0; i < n; ++i) {
            if (c.reflexive) add(i, i);
            for (int j = 0; j < n; ++j) {
                if (!m.rel[i][j]) continue;
                if (c.symmetric) add(j, i);
                for (int k = 0; k < n; ++k) {
                    if (c.transitive && m.rel[j][k]) add(i, k);
                    if (c.euclidean && m.rel[i][k]) add(j, k);
                }
            }
        }
    }
    return changed;
}

// adds the R edges that F1/F2 ask for, using the trivial witness
bool repair_coherence(Model& m) {
    bool changed = false;
    int n = m.n;
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            if (!m.rel[w][v]) continue;
            for (int v2 = 0; v2 < n; ++v2) {
                if (!m.le[v][v2]) continue;
                bool ok = false;
                for (int w2 = 0; w2 < n && !ok; ++w2) ok = m.le[w][w2] && m.rel[w2][v2];
                if (!ok) m.rel[w][v2] = changed = true;
            }
            for (int w2 = 0; w2 < n; ++w2) {
                if (!m.le[w][w2]) continue;
                bool ok = false;
                for (int v2 = 0; v2 < n && !ok; ++v2) ok = m.rel[w2][v2] && m.le[v][v2];
                if (!ok) m.rel[w2][v] = changed = true;
            }
        }
    return changed;
}

std::string encode(const Model& m, const std::vector<int>& perm, const std::vector<std::string>& atoms) {
    int n = m.n;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string s;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s += m.le[inv[i]][inv[j]] ? '1' : '0';
            s += m.rel[inv[i]][inv[j]] ? '1' : '0';
        }
    for (int i = 0; i < n; ++i)
        for (const auto& p : atoms) s += m.val[inv[i]].count(p) ? '1' : '0';
    return s;
}

bool order_compatible(const Model& m, const std::vector<int>& perm) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.le[i][j] && perm[i] > perm[j]) return false;
    return true;
}

// A model is emitted only when it is the least encoding among its
// relabellings that keep ≤ inside the index order.
bool canonical(const Model& m, const std::vector<std::string>& atoms) {
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string self = encode(m, perm, atoms);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (order_compatible(m, perm) && encode(m, perm, atoms) < self) return false;
    return true;
}

std::vector<Mask> up_sets(const Model& m) {
    std::vector<Mask> out;
    for (Mask s = 0; s < bit(m.n); ++s) {
        bool ok = true;
        for (int i = 0; i < m.n && ok; ++i)
            for (int j = 0; j < m.n && ok; ++j)
                if ((s & bit(i)) && m.le[i][j] && !(s & bit(j))) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<std::string> modal_atoms(const Formula& f) {
    if (has_quantifier(f)) throw std::invalid_argument("first-order evaluation unsupported");
    auto s = atom_names(f);
    return {s.begin(), s.end()};
}

}  // namespace

Model Model::empty(int n) {
    Model m;
    m.n = n;
    m.le.assign(n, std::vector<bool>(n, false));
    m.rel.assign(n, std::vector<bool>(n, false));
    m.val.assign(n, {});
    for (int i = 0; i < n; ++i) m.le[i][i] = true;
    return m;
}

std::vector<std::string> validate_model(const Model& m) {
    std::vector<std::string> out;
    try {
        check_shape(m);
    } catch (const std::invalid_argument& e) {
        return {e.what()};
    }
    int n = m.n;
    for (int w = 0; w < n; ++w)
        if (!m.le[w][w]) out.push_back("≤ not reflexive at (" + std::to_string(w) + ")");
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            if (w != v && m.le[w][v] && m.le[v][w]) {
                if (w < v) out.push_back("≤ not antisymmetric at " + world_pair(w, v));
            }
            if (!m.le[w][v]) continue;
            for (int u = 0; u < n; ++u)
                if (m.le[v][u] && !m.le[w][u])
                    out.push_back("≤ not transitive at (" + std::to_string(w) + "," + std::to_string(v) + "," +
                                  std::to_string(u) + ")");
            for (const auto& p : m.val[w])
                if (!m.val[v].count(p))
                    out.push_back("V not monotone at (" + std::to_string(w) + "," + std::to_string(v) + "," + p + ")");
        }
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            if (!m.rel[w][v]) continue;
            for (int v2 = 0; v2 < n; ++v2) {
                if (!m.le[v][v2]) continue;
                bool ok = false;
                for (int w2 = 0; w2 < n && !ok; ++w2) ok = m.le[w][w2] && m.rel[w2][v2];
                if (!ok)
                    out.push_back("F1 at (" + std::to_string(w) + "," + std::to_string(v) + "," + std::to_string(v2) +
                                  ")");
            }
            for (int w2 = 0; w2 < n; ++w2) {
                if (!m.le[w][w2]) continue;
                bool ok = false;
                for (int v2 = 0; v2 < n && !ok; ++v2) ok = m.rel[w2][v2] && m.le[v][v2];
                if (!ok)
                    out.push_back("F2 at (" + std::to_string(w2) + "," + std::to_string(w) + "," + std::to_string(v) +
                                  ")");
            }
        }
    return out;
}

bool satisfies_frame(const Model& m, const FrameCondition& c) {
    int n = m.n;
    for (int i = 0; i < n; ++i) {
        if (c.reflexive && !m.rel[i][i]) return false;
        for (int j = 0; j < n; ++j) {
            if (!m.rel[i][j]) continue;
            if (c.symmetric && !m.rel[j][i]) return false;
            for (int k = 0; k < n; ++k) {
                if (c.transitive && m.rel[j][k] && !m.rel[i][k]) return false;
                if (c.euclidean && m.rel[i][k] && !m.rel[j][k]) return false;
            }
        }
    }
    return true;
}

bool eval(const Model& m, int w, const Formula& f) {
    check_shape(m);
    if (w < 0 || w >= m.n) throw std::invalid_argument("world out of range");
    Evaluator ev(m);
    return ev(f) & bit(w);
}

bool is_valid_in_model(const Model& m, const Formula& f) {
    check_shape(m);
    Evaluator ev(m);
    return ev(f) == ev.all;
}

void enumerate_models(int max_worlds, const std::vector<std::string>& atoms, const FrameCondition& c,
                      const std::function<bool(const Model&)>& visit) {
    for (int n = 1; n <= max_worlds; ++n) {
        // every finite order has a linear extension, so ≤ may be taken inside the index order
        std::vector<std::pair<int, int>> above;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) above.emplace_back(i, j);
        for (Mask ls = 0; ls < bit(static_cast<int>(above.size())); ++ls) {
            Model m = Model::empty(n);
            for (std::size_t k = 0; k < above.size(); ++k)
                if (ls & bit(static_cast<int>(k))) m.le[above[k].first][above[k].second] = true;
            bool transitive = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (m.le[i][j] && m.le[j][k] && !m.le[i][k]) transitive = false;
            if (!transitive) continue;
            std::vector<Mask> ups = up_sets(m);
            for (Mask rs = 0; rs < bit(n * n); ++rs) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m.rel[i][j] = rs & bit(i * n + j);
                if (!satisfies_frame(m, c) || !coherent(m)) continue;
                std::vector<std::size_t> pick(atoms.size(), 0);
                while (true) {
                    for (int w = 0; w < n; ++w) m.val[w].clear();
                    for (std::size_t a = 0; a < atoms.size(); ++a)
                        for (int w = 0; w < n; ++w)
                            if (ups[pick[a]] & bit(w)) m.val[w].insert(atoms[a]);
                    if (canonical(m, atoms) && !visit(m)) return;
                    std::size_t a = 0;
                    while (a < pick.size() && ++pick[a] == ups.size()) pick[a++] = 0;
                    if (a == pick.size()) break;
                }
            }
        }
    }
}

std::optional<Model> countermodel_search(const Formula& f, int max_worlds, const FrameCondition& c) {
    std::vector<std::string> atoms = modal_atoms(f);
    std::optional<Model> found;
    enumerate_models(max_worlds, atoms, c, [&](const Model& m) {
        if (is_valid_in_model(m, f)) return true;
        found = m;
        return false;
    });
    return found;
}

Model random_model(std::uint64_t seed, int n, const FrameCondition& c, const std::vector<std::string>& atoms) {
    if (n < 1 || n > 64) throw std::invalid_argument("random models need 1 to 64 worlds");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution order_edge(0.3), rel_edge(0.35), holds(0.3);
    Model m = Model::empty(n);
    for (int attempt = 0; attempt < 50; ++attempt) {
        m = Model::empty(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m.le[i][j] = order_edge(rng);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (m.le[i][k] && m.le[k][j]) m.le[i][j] = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.rel[i][j] = rel_edge(rng);
        close_frame(m, c);
        if (coherent(m)) break;
    }
    while (repair_coherence(m) | close_frame(m, c)) {
    }
    for (int w = 0; w < n; ++w)
        for (const auto& p : atoms)
            if (holds(rng))
                for (int v = 0; v < n; ++v)
                    if (m.le[w][v]) m.val[v].insert(p);
    return m;
}

std::string render_model(const Model& m) {
    std::ostringstream os;
    os << "worlds " << m.n << "\n";
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j && m.le[i][j]) os << "le " << i << " " << j << "\n";
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.rel[i][j]) os << "rel " << i << " " << j << "\n";
    for (int i = 0; i < m.n; ++i)
        for (const auto& p : m.val[i]) os << "val " << i << " " << p << "\n";
    return os.str();
}

Model parse_model(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<Model> m;
    int lineno = 0;
    auto world = [&](std::istringstream& ls) {
        int w = -1;
        if (!(ls >> w) || w < 0 || w >= m->n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad world index");
        return w;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "worlds") {
            int n = 0;
            if (m || !(ls >> n) || n < 1 || n > 64)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad worlds line");
            m = Model::empty(n);
            continue;
        }
        if (!m) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected worlds first");
        if (kw == "le" || kw == "rel") {
            int i = world(ls), j = world(ls);
            (kw == "le" ? m->le : m->rel)[i][j] = true;
        } else if (kw == "val") {
            int i = world(ls);
            std::string p;
            if (!(ls >> p)) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing atom");
            m->val[i].insert(p);
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown keyword " + kw);
        }
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing text");
    }
    if (!m) throw std::invalid_argument("empty model description");
    return *m;
}

}  // namespace ecumene
