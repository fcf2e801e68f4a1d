#include "aaf/af.hpp"

#include <algorithm>

#include "aaf/digraph.hpp"
#include "aaf/errors.hpp"

namespace aaf {

ArgSet::ArgSet(std::vector<ArgumentId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ArgSet::contains(const ArgumentId& a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
}

bool ArgSet::is_subset_of(const ArgSet& o) const {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

bool ArgSet::operator<(const ArgSet& o) const {
    if (members_.size() != o.members_.size())
        return members_.size() < o.members_.size();
    return members_ < o.members_;
}

AF::AF(std::vector<ArgumentId> args, std::vector<Attack> attacks)
    : args_(std::move(args)), attacks_(std::move(attacks)) {
    std::sort(args_.begin(), args_.end());
    args_.erase(std::unique(args_.begin(), args_.end()), args_.end());
    if (args_.empty())
        throw EmptyArguments();
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
    for (const auto& [from, to] : attacks_) {
        if (!contains(from))
            throw DanglingAttack(from.text());
        if (!contains(to))
            throw DanglingAttack(to.text());
    }
}

bool AF::contains(const ArgumentId& a) const {
    return std::binary_search(args_.begin(), args_.end(), a);
}

bool AF::has_attack(const ArgumentId& from, const ArgumentId& to) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), Attack{from, to});
}

AF make_af(std::vector<ArgumentId> args, std::vector<Attack> attacks) {
    return AF(std::move(args), std::move(attacks));
}

AF union_of(const AF& f, const AF& g) {
    std::vector<ArgumentId> args = f.args();
    args.insert(args.end(), g.args().begin(), g.args().end());
    std::vector<Attack> attacks = f.attacks();
    attacks.insert(attacks.end(), g.attacks().begin(), g.attacks().end());
    return AF(std::move(args), std::move(attacks));
}

bool is_subframework(const AF& f, const AF& g) {
    return std::includes(g.args().begin(), g.args().end(), f.args().begin(), f.args().end()) &&
           std::includes(g.attacks().begin(), g.attacks().end(), f.attacks().begin(),
                         f.attacks().end());
}

namespace {

void require_members(const AF& f, const ArgSet& s) {
    for (const auto& a : s.members())
        if (!f.contains(a))
            throw NotInFramework(a.text());
}

} // namespace

ArgSet range(const AF& f, const ArgSet& s) {
    require_members(f, s);
    std::vector<ArgumentId> out = s.members();
    for (const auto& [from, to] : f.attacks())
        if (s.contains(from))
            out.push_back(to);
    return ArgSet(std::move(out));
}

bool defends(const AF& f, const ArgSet& s, const ArgumentId& a) {
    if (!f.contains(a))
        throw NotInFramework(a.text());
    require_members(f, s);
    Digraph g = Digraph::from(f);
    return g.characteristic_of(g.mask_of(s)).test(g.index_of(a));
}

ArgSet characteristic(const AF& f, const ArgSet& s) {
    require_members(f, s);
    Digraph g = Digraph::from(f);
    return g.arg_set_of(g.characteristic_of(g.mask_of(s)));
}

} // namespace aaf
