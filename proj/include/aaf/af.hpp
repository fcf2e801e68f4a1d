#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "aaf/argument.hpp"

namespace aaf {

using Attack = std::pair<ArgumentId, ArgumentId>;

// A finite set of argument identifiers, kept sorted and duplicate-free.
// Serves both as an extension and as a plain argument set.
class ArgSet {
public:
    ArgSet() = default;
    explicit ArgSet(std::vector<ArgumentId> members);

    const std::vector<ArgumentId>& members() const { return members_; }
    bool contains(const ArgumentId& a) const;
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool is_subset_of(const ArgSet& o) const;

    bool operator==(const ArgSet& o) const { return members_ == o.members_; }
    // Canonical order: by cardinality, then lexicographically.
    bool operator<(const ArgSet& o) const;

private:
    std::vector<ArgumentId> members_;
};

using Extension = ArgSet;

// Immutable argumentation framework: arguments plus a directed attack
// relation. Arguments are non-empty and every attack endpoint is declared.
class AF {
public:
    AF(std::vector<ArgumentId> args, std::vector<Attack> attacks);

    const std::vector<ArgumentId>& args() const { return args_; }
    const std::vector<Attack>& attacks() const { return attacks_; }
    int arg_count() const { return static_cast<int>(args_.size()); }
    int attack_count() const { return static_cast<int>(attacks_.size()); }

    bool contains(const ArgumentId& a) const;
    bool has_attack(const ArgumentId& from, const ArgumentId& to) const;
    ArgSet arg_set() const { return ArgSet(args_); }

    bool operator==(const AF& o) const = default;

private:
    std::vector<ArgumentId> args_;    // sorted, unique
    std::vector<Attack> attacks_;     // sorted, unique
};

AF make_af(std::vector<ArgumentId> args, std::vector<Attack> attacks);

AF union_of(const AF& f, const AF& g);
bool is_subframework(const AF& f, const AF& g);

// S together with everything S attacks.
ArgSet range(const AF& f, const ArgSet& s);
bool defends(const AF& f, const ArgSet& s, const ArgumentId& a);
// All arguments defended by S.
ArgSet characteristic(const AF& f, const ArgSet& s);

} // namespace aaf
