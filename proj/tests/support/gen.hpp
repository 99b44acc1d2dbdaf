#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "ecumene/formula.hpp"
#include "ecumene/sequent.hpp"

namespace ecumene::testing {

inline std::uint64_t base_seed() {
    if (const char* s = std::getenv("ECUMENE_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240611;
}

struct Lang {
    bool classical = true;
    bool modal = false;
    bool quantifiers = false;
};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin() { return pick(2) == 0; }
    std::mt19937_64& rng() { return rng_; }

    Formula atom(const Lang& l, const std::vector<std::string>& bound) {
        static const char* names[] = {"a", "b", "c"};
        std::string n = names[pick(l.quantifiers ? 2 : 3)];
        std::vector<Term> args;
        if (l.quantifiers) args.push_back(Term::var(bound.empty() || pick(4) == 0 ? std::string("k") : bound[pick(bound.size())]));
        if (l.classical && pick(3) == 0) return atom_c(n, args);
        return atom_i(n, args);
    }

    Formula formula(int depth, const Lang& l, std::vector<std::string> bound = {}) {
        if (depth <= 0 || pick(5) == 0) return pick(12) == 0 ? bot() : atom(l, bound);
        std::vector<int> ops = {0, 1, 3, 5};
        if (l.classical) ops.insert(ops.end(), {2, 4, 6});
        if (l.modal) ops.insert(ops.end(), {7, 8});
        if (l.modal && l.classical) ops.push_back(9);
        if (l.quantifiers) ops.insert(ops.end(), {10, 11});
        if (l.quantifiers && l.classical) ops.push_back(12);
        int op = ops[pick(ops.size())];
        auto sub = [&] { return formula(depth - 1, l, bound); };
        switch (op) {
        case 0: return conj(sub(), sub());
        case 1: return disj_i(sub(), sub());
        case 2: return disj_c(sub(), sub());
        case 3: return imp_i(sub(), sub());
        case 4: return imp_c(sub(), sub());
        case 5:
        case 6: return neg(sub());
        case 7: return box(sub());
        case 8: return dia_i(sub());
        case 9: return dia_c(sub());
        default: {
            std::string x = bound.size() % 2 ? "y" : "x";
            bound.push_back(x);
            Formula b = formula(depth - 1, l, bound);
            if (op == 10) return forall(x, b);
            if (op == 11) return exists_i(x, b);
            return exists_c(x, b);
        }
        }
    }

    StoupSequent stoup_sequent(int depth, const Lang& l) {
        StoupSequent s;
        for (int i = pick(3); i > 0; --i) add_unique(s.gamma, Labeled{"", formula(depth, l)});
        for (int i = pick(3); i > 0; --i) add_unique(s.delta, Labeled{"", formula(depth, l)});
        if (coin()) s.stoup = Labeled{"", formula(depth, l)};
        return s;
    }

    NestedNode nested_node(int depth, int fdepth, const Lang& l, bool output) {
        NestedNode n;
        for (int i = pick(3); i > 0; --i) add_unique(n.left, formula(fdepth, l));
        for (int i = pick(2); i > 0; --i) add_unique(n.right, formula(fdepth, l));
        int kids = depth > 0 ? pick(3) : 0;
        int out_kid = output && kids > 0 && coin() ? pick(kids) : -1;
        if (output && out_kid < 0) n.out = formula(fdepth, l);
        for (int i = 0; i < kids; ++i) n.kids.push_back(nested_node(depth - 1, fdepth, l, i == out_kid));
        return n;
    }

private:
    std::mt19937_64 rng_;
};

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        out.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string data_path(const std::string& name) { return std::string(ECUMENE_TEST_DATA) + "/" + name; }

}  // namespace ecumene::testing
