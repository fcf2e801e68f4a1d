#pragma once

#include <vector>

#include "aaf/af.hpp"
#include "aaf/bits.hpp"

namespace aaf {

// Index-based attack structure with per-argument attacker/target bitsets.
// Argument i corresponds to ids[i]; ids follow the canonical (textual) order.
struct Digraph {
    int n = 0;
    std::vector<ArgumentId> ids;
    std::vector<Bits> in;   // in[i]  = attackers of i
    std::vector<Bits> out;  // out[i] = arguments attacked by i
    Bits self;              // self-attackers

    static Digraph from(const AF& f);

    int index_of(const ArgumentId& a) const;  // -1 when absent
    Bits mask_of(const ArgSet& s) const;      // throws NotInFramework
    ArgSet arg_set_of(const Bits& mask) const;

    Bits attacked_by(const Bits& s) const;    // union of out[i], i in s
    Bits range_of(const Bits& s) const { return s | attacked_by(s); }
    bool conflict_free(const Bits& s) const;
    // Arguments whose attackers are all attacked by s.
    Bits characteristic_of(const Bits& s) const;
    bool defends_all(const Bits& s) const { return s.is_subset_of(characteristic_of(s)); }
};

} // namespace aaf
