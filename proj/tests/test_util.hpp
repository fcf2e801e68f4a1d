#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "aaf/af.hpp"
#include "aaf/generate.hpp"
#include "aaf/reductions.hpp"
#include "aaf/semantics.hpp"

namespace testutil {

using namespace aaf;

inline ArgumentId id(const std::string& name) { return ArgumentId::plain(name); }

inline Extension ext(std::initializer_list<std::string> names) {
    std::vector<ArgumentId> members;
    for (const auto& n : names)
        members.push_back(id(n));
    return Extension(std::move(members));
}

inline AF af(std::initializer_list<std::string> args,
             std::initializer_list<std::pair<std::string, std::string>> attacks) {
    std::vector<ArgumentId> a;
    for (const auto& n : args)
        a.push_back(id(n));
    std::vector<Attack> r;
    for (const auto& [x, y] : attacks)
        r.push_back({id(x), id(y)});
    return AF(std::move(a), std::move(r));
}

inline ExtensionSet family(const AF& owner, std::initializer_list<Extension> sets) {
    return ExtensionSet(owner.args(), std::vector<Extension>(sets));
}

// The five-argument running example: a->b, c->b, c->d, d->c, d->e, e->e.
inline AF example1() {
    return af({"a", "b", "c", "d", "e"},
              {{"a", "b"}, {"c", "b"}, {"c", "d"}, {"d", "c"}, {"d", "e"}, {"e", "e"}});
}

// Nine arguments with two stuck self-attackers; semi-stable and preferred
// families differ by exactly {b,c,f}.
inline AF counterexample_af() {
    return af({"a", "b", "c", "d", "e", "f", "g1", "g2", "h"},
              {{"g1", "g1"},
               {"g2", "g2"},
               {"a", "b"},
               {"b", "a"},
               {"c", "d"},
               {"d", "c"},
               {"a", "g1"},
               {"b", "e"},
               {"c", "e"},
               {"d", "g2"},
               {"e", "f"},
               {"f", "h"},
               {"h", "e"}});
}

inline HornTheory random_horn(SplitMix64& rng, int max_atoms = 10, int max_rules = 15) {
    HornTheory t;
    int n_atoms = 1 + static_cast<int>(rng.below(max_atoms));
    for (int i = 1; i <= n_atoms; ++i)
        t.atoms.push_back("p" + std::to_string(i));
    int n_rules = static_cast<int>(rng.below(max_rules + 1));
    for (int i = 0; i < n_rules; ++i) {
        HornRule r;
        r.head = t.atoms[rng.below(t.atoms.size())];
        int body = static_cast<int>(rng.below(4));
        for (int k = 0; k < body; ++k)
            r.body.push_back(t.atoms[rng.below(t.atoms.size())]);
        t.rules.push_back(std::move(r));
    }
    return t;
}

inline Cnf3 random_cnf(SplitMix64& rng, int max_vars = 6, int max_clauses = 10) {
    Cnf3 phi;
    phi.num_vars = 1 + static_cast<int>(rng.below(max_vars));
    int n_clauses = 1 + static_cast<int>(rng.below(max_clauses));
    for (int j = 0; j < n_clauses; ++j) {
        std::vector<int> clause;
        int len = 1 + static_cast<int>(rng.below(3));
        for (int k = 0; k < len; ++k) {
            int v = 1 + static_cast<int>(rng.below(phi.num_vars));
            clause.push_back(rng.below(2) ? v : -v);
        }
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

} // namespace testutil
