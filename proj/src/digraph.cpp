#include "aaf/digraph.hpp"

#include <algorithm>

#include "aaf/errors.hpp"

namespace aaf {

Digraph Digraph::from(const AF& f) {
    Digraph g;
    g.ids = f.args();
    g.n = static_cast<int>(g.ids.size());
    g.in.assign(g.n, Bits(g.n));
    g.out.assign(g.n, Bits(g.n));
    g.self = Bits(g.n);
    for (const auto& [from, to] : f.attacks()) {
        int a = g.index_of(from);
        int b = g.index_of(to);
        g.out[a].set(b);
        g.in[b].set(a);
        if (a == b)
            g.self.set(a);
    }
    return g;
}

int Digraph::index_of(const ArgumentId& a) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), a);
    if (it == ids.end() || !(*it == a))
        return -1;
    return static_cast<int>(it - ids.begin());
}

Bits Digraph::mask_of(const ArgSet& s) const {
    Bits m(n);
    for (const auto& a : s.members()) {
        int i = index_of(a);
        if (i < 0)
            throw NotInFramework(a.text());
        m.set(i);
    }
    return m;
}

ArgSet Digraph::arg_set_of(const Bits& mask) const {
    std::vector<ArgumentId> members;
    for (int i = mask.next_set(0); i >= 0; i = mask.next_set(i + 1))
        members.push_back(ids[i]);
    return ArgSet(std::move(members));
}

Bits Digraph::attacked_by(const Bits& s) const {
    Bits acc(n);
    for (int i = s.next_set(0); i >= 0; i = s.next_set(i + 1))
        acc |= out[i];
    return acc;
}

bool Digraph::conflict_free(const Bits& s) const {
    for (int i = s.next_set(0); i >= 0; i = s.next_set(i + 1))
        if (out[i].intersects(s))
            return false;
    return true;
}

Bits Digraph::characteristic_of(const Bits& s) const {
    Bits att = attacked_by(s);
    Bits def(n);
    for (int i = 0; i < n; ++i)
        if (in[i].is_subset_of(att))
            def.set(i);
    return def;
}

} // namespace aaf
