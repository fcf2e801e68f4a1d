#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aaf/af.hpp"

namespace aaf {

enum class SemanticsId { grd, adm, stb, com, prf, sem, stg };

inline constexpr SemanticsId all_semantics[] = {
    SemanticsId::grd, SemanticsId::adm, SemanticsId::stb, SemanticsId::com,
    SemanticsId::prf, SemanticsId::sem, SemanticsId::stg,
};

std::string to_string(SemanticsId s);
std::optional<SemanticsId> semantics_from_string(const std::string& name);

// A set of extensions in canonical order (cardinality, then lexicographic),
// remembering the argument set it was computed against.
class ExtensionSet {
public:
    ExtensionSet() = default;
    ExtensionSet(std::vector<ArgumentId> owner_args, std::vector<Extension> sets);

    const std::vector<Extension>& sets() const { return sets_; }
    const std::vector<ArgumentId>& owner_args() const { return owner_args_; }
    size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    bool contains(const Extension& e) const;

    // Set-of-sets comparison; the owner is not part of the value.
    bool operator==(const ExtensionSet& o) const { return sets_ == o.sets_; }

private:
    std::vector<ArgumentId> owner_args_;
    std::vector<Extension> sets_;
};

// Definitional solvers: filter/maximise over all subsets, straight from the
// semantics definitions. They are the oracle the search engines are checked
// against and are guarded to 20 arguments.
namespace reference {
ExtensionSet conflict_free_sets(const AF& f);
ExtensionSet extensions(const AF& f, SemanticsId sigma);
// Same results, subset scan parallelised with OpenMP.
ExtensionSet extensions_parallel(const AF& f, SemanticsId sigma);
} // namespace reference

ExtensionSet conflict_free_sets(const AF& f);

// Dispatches to the reference solver on small frameworks and to the
// backtracking engines otherwise.
ExtensionSet extensions(const AF& f, SemanticsId sigma);

// Backtracking stable enumeration; same contract as extensions(f, stb) at any
// size the search can handle.
ExtensionSet stable_backtracking(const AF& f);

// The unique grounded extension.
Extension grounded(const AF& f);

bool verify(const AF& f, SemanticsId sigma, const Extension& s);

bool credulous(const AF& f, SemanticsId sigma, const ArgumentId& a);
bool skeptical(const AF& f, SemanticsId sigma, const ArgumentId& a);
bool exists(const AF& f, SemanticsId sigma);
bool exists_nonempty(const AF& f, SemanticsId sigma);

} // namespace aaf
