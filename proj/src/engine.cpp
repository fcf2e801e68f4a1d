#include "aaf/engine.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace aaf {
namespace engine {

namespace {

std::vector<int> degree_order(const Digraph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> deg(g.n);
    for (int i = 0; i < g.n; ++i)
        deg[i] = g.in[i].count() + g.out[i].count();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    return order;
}

// ---------------------------------------------------------------------------
// Stable: two-valued labelling. An argument is in the extension or attacked
// by it; out-labels need an in-labelled attacker.
// ---------------------------------------------------------------------------

struct StableSearch {
    static constexpr int8_t UNSET = -1, OUT = 0, IN = 1;

    const Digraph& g;
    int n;
    std::vector<int8_t> lab;
    std::vector<int16_t> cin;    // attackers labelled IN
    std::vector<int16_t> cunset; // attackers still unset
    std::vector<int> work;
    std::vector<int> order;
    std::vector<Bits> found;

    explicit StableSearch(const Digraph& g_)
        : g(g_), n(g_.n), lab(n, UNSET), cin(n, 0), cunset(n, 0), order(degree_order(g_)) {
        for (int i = 0; i < n; ++i)
            cunset[i] = static_cast<int16_t>(g.in[i].count());
    }

    bool set_label(int x, int8_t v) {
        if (lab[x] != UNSET)
            return lab[x] == v;
        lab[x] = v;
        for (int t = g.out[x].next_set(0); t >= 0; t = g.out[x].next_set(t + 1)) {
            cunset[t]--;
            if (v == IN)
                cin[t]++;
            work.push_back(t);
        }
        work.push_back(x);
        if (v == IN) {
            for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1))
                if (!set_label(b, OUT))
                    return false;
            for (int t = g.out[x].next_set(0); t >= 0; t = g.out[x].next_set(t + 1))
                if (!set_label(t, OUT))
                    return false;
        }
        return true;
    }

    int unset_attacker(int x) const {
        for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1))
            if (lab[b] == UNSET)
                return b;
        return -1;
    }

    bool recheck(int i) {
        if (lab[i] == UNSET) {
            if (cin[i] > 0)
                return set_label(i, OUT);
            if (cunset[i] == 0)
                return set_label(i, IN);
        } else if (lab[i] == OUT && cin[i] == 0) {
            if (cunset[i] == 0)
                return false;
            if (cunset[i] == 1) {
                int j = unset_attacker(i);
                assert(j >= 0);
                return set_label(j, IN);
            }
        }
        return true;
    }

    bool propagate() {
        while (!work.empty()) {
            int i = work.back();
            work.pop_back();
            if (!recheck(i)) {
                work.clear();
                return false;
            }
        }
        return true;
    }

    int pick() const {
        for (int i : order)
            if (lab[i] == UNSET)
                return i;
        return -1;
    }

    void emit() {
        Bits s(n);
        for (int i = 0; i < n; ++i)
            if (lab[i] == IN)
                s.set(i);
        found.push_back(std::move(s));
    }

    void rec() {
        int i = pick();
        if (i < 0) {
            emit();
            return;
        }
        auto lab0 = lab;
        auto cin0 = cin;
        auto cunset0 = cunset;
        if (set_label(i, IN) && propagate())
            rec();
        lab = lab0;
        cin = cin0;
        cunset = cunset0;
        work.clear();
        if (set_label(i, OUT) && propagate())
            rec();
        lab = std::move(lab0);
        cin = std::move(cin0);
        cunset = std::move(cunset0);
        work.clear();
    }

    std::vector<Bits> run() {
        bool ok = true;
        for (int i = g.self.next_set(0); i >= 0 && ok; i = g.self.next_set(i + 1))
            ok = set_label(i, OUT);
        for (int i = 0; i < n; ++i)
            work.push_back(i);
        if (ok && propagate())
            rec();
        return std::move(found);
    }
};

// ---------------------------------------------------------------------------
// Complete: tri-valued labelling search. Legal labellings satisfy
//   in    <=> all attackers out
//   out   <=> some attacker in
//   undec <=> no attacker in and some attacker undec
// and are in bijection with the complete extensions.
// ---------------------------------------------------------------------------

struct CompleteSearch {
    static constexpr int8_t UNSET = -1, IN = 0, OUT = 1, UND = 2;
    static constexpr uint8_t B_IN = 1, B_OUT = 2, B_UND = 4;

    struct Cnt {
        int16_t cin = 0, cout = 0, cund = 0;
        int16_t poss_in = 0, poss_und = 0, notout = 0;
    };

    const Digraph& g;
    int n;
    std::vector<int8_t> lab;
    std::vector<uint8_t> can;
    std::vector<Cnt> cnt; // over attackers
    std::vector<int16_t> deg;
    std::vector<int> work;
    std::vector<int> order;
    std::vector<Bits> found;

    explicit CompleteSearch(const Digraph& g_)
        : g(g_), n(g_.n), lab(n, UNSET), can(n, B_IN | B_OUT | B_UND), cnt(n), deg(n),
          order(degree_order(g_)) {
        for (int i = 0; i < n; ++i) {
            deg[i] = static_cast<int16_t>(g.in[i].count());
            cnt[i].poss_in = deg[i];
            cnt[i].poss_und = deg[i];
        }
    }

    Cnt contrib(int x) const {
        Cnt c;
        switch (lab[x]) {
        case IN: c.cin = 1; c.poss_in = 1; c.notout = 1; break;
        case OUT: c.cout = 1; break;
        case UND: c.cund = 1; c.poss_und = 1; c.notout = 1; break;
        default:
            if (can[x] & B_IN) c.poss_in = 1;
            if (can[x] & B_UND) c.poss_und = 1;
            if (!(can[x] & B_OUT)) c.notout = 1;
        }
        return c;
    }

    void apply_delta(int x, const Cnt& before) {
        Cnt after = contrib(x);
        int16_t d_cin = after.cin - before.cin;
        int16_t d_cout = after.cout - before.cout;
        int16_t d_cund = after.cund - before.cund;
        int16_t d_pin = after.poss_in - before.poss_in;
        int16_t d_pund = after.poss_und - before.poss_und;
        int16_t d_nout = after.notout - before.notout;
        for (int t = g.out[x].next_set(0); t >= 0; t = g.out[x].next_set(t + 1)) {
            Cnt& c = cnt[t];
            c.cin += d_cin;
            c.cout += d_cout;
            c.cund += d_cund;
            c.poss_in += d_pin;
            c.poss_und += d_pund;
            c.notout += d_nout;
            work.push_back(t);
        }
        work.push_back(x);
    }

    bool set_label(int x, int8_t v) {
        if (lab[x] != UNSET)
            return lab[x] == v;
        if (!(can[x] & (uint8_t(1) << v)))
            return false;
        Cnt before = contrib(x);
        lab[x] = v;
        apply_delta(x, before);
        if (v == IN) {
            for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1))
                if (!set_label(b, OUT))
                    return false;
        } else if (v == UND) {
            for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1))
                if (!remove_can(b, B_IN))
                    return false;
        }
        return true;
    }

    bool remove_can(int x, uint8_t bit) {
        if (lab[x] != UNSET)
            return !((uint8_t(1) << lab[x]) & bit);
        if (!(can[x] & bit))
            return true;
        Cnt before = contrib(x);
        can[x] &= ~bit;
        if (can[x] == 0)
            return false;
        apply_delta(x, before);
        return true;
    }

    int find_unset(int x, uint8_t bit) const {
        for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1))
            if (lab[b] == UNSET && (can[b] & bit))
                return b;
        return -1;
    }

    bool recheck(int i) {
        switch (lab[i]) {
        case UNSET: {
            if (cnt[i].cin > 0)
                return set_label(i, OUT);
            if (cnt[i].cout == deg[i])
                return set_label(i, IN);
            if ((can[i] & B_IN) && cnt[i].notout > 0 && !remove_can(i, B_IN))
                return false;
            if ((can[i] & B_OUT) && cnt[i].poss_in == 0 && !remove_can(i, B_OUT))
                return false;
            if ((can[i] & B_UND) && cnt[i].poss_und == 0 && !remove_can(i, B_UND))
                return false;
            if (lab[i] != UNSET)
                return true;
            uint8_t c = can[i];
            if (c == B_IN) return set_label(i, IN);
            if (c == B_OUT) return set_label(i, OUT);
            if (c == B_UND) return set_label(i, UND);
            return true;
        }
        case OUT:
            if (cnt[i].cin == 0) {
                if (cnt[i].poss_in == 0)
                    return false;
                if (cnt[i].poss_in == 1) {
                    int j = find_unset(i, B_IN);
                    assert(j >= 0);
                    return set_label(j, IN);
                }
            }
            return true;
        case UND:
            if (cnt[i].cin > 0)
                return false;
            if (cnt[i].cund == 0) {
                if (cnt[i].poss_und == 0)
                    return false;
                if (cnt[i].poss_und == 1) {
                    int j = find_unset(i, B_UND);
                    assert(j >= 0);
                    return set_label(j, UND);
                }
            }
            return true;
        default:
            return true;
        }
    }

    bool propagate() {
        while (!work.empty()) {
            int i = work.back();
            work.pop_back();
            if (!recheck(i)) {
                work.clear();
                return false;
            }
        }
        return true;
    }

    int pick() const {
        for (int i : order)
            if (lab[i] == UNSET)
                return i;
        return -1;
    }

    bool legal() const {
        for (int i = 0; i < n; ++i) {
            int ins = 0, outs = 0, unds = 0;
            for (int b = g.in[i].next_set(0); b >= 0; b = g.in[i].next_set(b + 1)) {
                if (lab[b] == IN) ins++;
                else if (lab[b] == OUT) outs++;
                else unds++;
            }
            bool ok = false;
            if (lab[i] == IN) ok = (ins == 0 && unds == 0);
            if (lab[i] == OUT) ok = (ins > 0);
            if (lab[i] == UND) ok = (ins == 0 && unds > 0);
            if (!ok)
                return false;
        }
        return true;
    }

    void emit() {
        assert(legal());
        Bits s(n);
        for (int i = 0; i < n; ++i)
            if (lab[i] == IN)
                s.set(i);
        found.push_back(std::move(s));
    }

    void rec() {
        int i = pick();
        if (i < 0) {
            emit();
            return;
        }
        auto lab0 = lab;
        auto can0 = can;
        auto cnt0 = cnt;
        for (int8_t v : {IN, OUT, UND}) {
            if (!(can0[i] & (uint8_t(1) << v)))
                continue;
            if (set_label(i, v) && propagate())
                rec();
            lab = lab0;
            can = can0;
            cnt = cnt0;
            work.clear();
        }
    }

    std::vector<Bits> run() {
        bool ok = true;
        for (int i = g.self.next_set(0); i >= 0 && ok; i = g.self.next_set(i + 1))
            ok = remove_can(i, B_IN);
        for (int i = 0; i < n; ++i)
            work.push_back(i);
        if (ok && propagate())
            rec();
        return std::move(found);
    }
};

// ---------------------------------------------------------------------------
// Admissible: membership search with defence obligations. Every attacker of a
// member must be attacked by the final member set.
// ---------------------------------------------------------------------------

struct AdmissibleSearch {
    static constexpr int8_t UNSET = -1, NOTIN = 0, IN = 1;

    const Digraph& g;
    int n;
    std::vector<int8_t> lab;
    std::vector<int16_t> cin;   // attackers labelled IN
    std::vector<int16_t> cposs; // attackers IN or unset
    std::vector<uint8_t> oblig; // must end up attacked
    std::vector<int> work;
    std::vector<int> order;
    std::vector<Bits> found;

    explicit AdmissibleSearch(const Digraph& g_)
        : g(g_), n(g_.n), lab(n, UNSET), cin(n, 0), cposs(n, 0), oblig(n, 0),
          order(degree_order(g_)) {
        for (int i = 0; i < n; ++i)
            cposs[i] = static_cast<int16_t>(g.in[i].count());
    }

    bool set_label(int x, int8_t v) {
        if (lab[x] != UNSET)
            return lab[x] == v;
        lab[x] = v;
        for (int t = g.out[x].next_set(0); t >= 0; t = g.out[x].next_set(t + 1)) {
            if (v == IN)
                cin[t]++;
            else
                cposs[t]--;
            work.push_back(t);
        }
        if (v == IN) {
            for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1)) {
                if (!oblig[b]) {
                    oblig[b] = 1;
                    work.push_back(b);
                }
                if (!set_label(b, NOTIN))
                    return false;
            }
            for (int t = g.out[x].next_set(0); t >= 0; t = g.out[x].next_set(t + 1))
                if (!set_label(t, NOTIN))
                    return false;
        }
        return true;
    }

    int unset_attacker(int x) const {
        for (int b = g.in[x].next_set(0); b >= 0; b = g.in[x].next_set(b + 1))
            if (lab[b] == UNSET)
                return b;
        return -1;
    }

    bool recheck(int i) {
        if (!oblig[i] || cin[i] > 0)
            return true;
        if (cposs[i] == 0)
            return false;
        if (cposs[i] == 1) {
            int j = unset_attacker(i);
            assert(j >= 0);
            return set_label(j, IN);
        }
        return true;
    }

    bool propagate() {
        while (!work.empty()) {
            int i = work.back();
            work.pop_back();
            if (!recheck(i)) {
                work.clear();
                return false;
            }
        }
        return true;
    }

    int pick() const {
        for (int i : order)
            if (lab[i] == UNSET)
                return i;
        return -1;
    }

    void emit() {
        Bits s(n);
        for (int i = 0; i < n; ++i)
            if (lab[i] == IN)
                s.set(i);
        assert(g.conflict_free(s) && g.defends_all(s));
        found.push_back(std::move(s));
    }

    void rec() {
        int i = pick();
        if (i < 0) {
            emit();
            return;
        }
        auto lab0 = lab;
        auto cin0 = cin;
        auto cposs0 = cposs;
        auto oblig0 = oblig;
        if (set_label(i, IN) && propagate())
            rec();
        lab = lab0;
        cin = cin0;
        cposs = cposs0;
        oblig = oblig0;
        work.clear();
        if (set_label(i, NOTIN) && propagate())
            rec();
        lab = std::move(lab0);
        cin = std::move(cin0);
        cposs = std::move(cposs0);
        oblig = std::move(oblig0);
        work.clear();
    }

    std::vector<Bits> run() {
        bool ok = true;
        for (int i = g.self.next_set(0); i >= 0 && ok; i = g.self.next_set(i + 1))
            ok = set_label(i, NOTIN);
        if (ok && propagate())
            rec();
        return std::move(found);
    }
};

// ---------------------------------------------------------------------------
// Stage: maximal conflict-free sets via Bron-Kerbosch on the complement of
// the symmetric conflict graph, then range-maximality filtering.
// ---------------------------------------------------------------------------

struct MaxConflictFree {
    const Digraph& g;
    int n;
    std::vector<Bits> compat; // non-conflicting other vertices
    std::vector<Bits> found;

    explicit MaxConflictFree(const Digraph& g_) : g(g_), n(g_.n), compat(n, Bits(n)) {
        Bits verts(n);
        for (int i = 0; i < n; ++i)
            if (!g.self.test(i))
                verts.set(i);
        for (int i = verts.next_set(0); i >= 0; i = verts.next_set(i + 1)) {
            Bits c = verts;
            c.subtract(g.in[i]);
            c.subtract(g.out[i]);
            c.reset(i);
            compat[i] = std::move(c);
        }
        Bits p = verts;
        bk(Bits(n), p, Bits(n));
    }

    void bk(Bits r, Bits p, Bits x) {
        if (p.none() && x.none()) {
            found.push_back(std::move(r));
            return;
        }
        // pivot with most compatible candidates
        int pivot = -1, best = -1;
        Bits px = p | x;
        for (int u = px.next_set(0); u >= 0; u = px.next_set(u + 1)) {
            int c = (p & compat[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        Bits cand = p;
        if (pivot >= 0)
            cand.subtract(compat[pivot]);
        for (int v = cand.next_set(0); v >= 0; v = cand.next_set(v + 1)) {
            Bits r2 = r;
            r2.set(v);
            bk(std::move(r2), p & compat[v], x & compat[v]);
            p.reset(v);
            x.set(v);
        }
    }
};

std::vector<Bits> range_maximal_bits(const Digraph& g, const std::vector<Bits>& sets) {
    std::map<Bits, std::vector<Bits>> by_range;
    for (const Bits& s : sets)
        by_range[g.range_of(s)].push_back(s);
    std::vector<Bits> out;
    for (const auto& [r, members] : by_range) {
        bool dominated = false;
        for (const auto& [r2, m2] : by_range)
            if (r != r2 && r.is_subset_of(r2)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.insert(out.end(), members.begin(), members.end());
    }
    return out;
}

} // namespace

std::vector<Bits> stable(const Digraph& g) { return StableSearch(g).run(); }

std::vector<Bits> complete(const Digraph& g) { return CompleteSearch(g).run(); }

std::vector<Bits> admissible(const Digraph& g) { return AdmissibleSearch(g).run(); }

std::vector<Bits> stage(const Digraph& g) {
    MaxConflictFree mcf(g);
    return range_maximal_bits(g, mcf.found);
}

Bits grounded(const Digraph& g) {
    Bits s(g.n);
    for (;;) {
        Bits next = g.characteristic_of(s);
        if (next == s)
            return s;
        s = std::move(next);
    }
}

std::vector<Bits> preferred(const Digraph& g) {
    std::vector<Bits> com = complete(g);
    std::vector<Bits> out;
    for (const Bits& s : com) {
        bool dominated = false;
        for (const Bits& t : com)
            if (s != t && s.is_subset_of(t)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

std::vector<Bits> semi_stable(const Digraph& g) { return range_maximal_bits(g, complete(g)); }

} // namespace engine
} // namespace aaf
