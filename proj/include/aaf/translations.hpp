#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aaf/af.hpp"

namespace aaf {

enum class TranslationId { tr1, tr2, tr3, tr4, tr5, tr6, tr7, tr8 };

inline constexpr TranslationId all_translations[] = {
    TranslationId::tr1, TranslationId::tr2, TranslationId::tr3, TranslationId::tr4,
    TranslationId::tr5, TranslationId::tr6, TranslationId::tr7, TranslationId::tr8,
};

std::string to_string(TranslationId id);
std::optional<TranslationId> translation_from_string(const std::string& name);

// A single translation or a composition. "tr4.tr8" denotes tr4 after tr8:
// the rightmost step is applied first.
struct TranslationRoute {
    std::vector<TranslationId> comp; // comp.front() is applied last

    TranslationRoute() = default;
    TranslationRoute(std::initializer_list<TranslationId> ids) : comp(ids) {}

    bool single() const { return comp.size() == 1; }
    std::string name() const;
    static std::optional<TranslationRoute> parse(const std::string& token);
    bool operator==(const TranslationRoute& o) const = default;
};

struct TranslationOutput {
    AF target;
    std::vector<ArgumentId> original_args; // the source framework's arguments
    std::vector<Extension> remainder;      // fixed sets to filter from target extensions
    TranslationRoute route;
};

// Applies a translation to a framework of plain arguments. Frameworks already
// containing reserved (decorated) identifiers are rejected; fresh arguments of
// intermediate steps in a composite route are decorated further instead.
TranslationOutput translate(const AF& f, TranslationId id);
TranslationOutput translate(const AF& f, const TranslationRoute& route);

TranslationOutput tr1(const AF& f);
TranslationOutput tr2(const AF& f);
TranslationOutput tr3(const AF& f);
TranslationOutput tr4(const AF& f);
TranslationOutput tr5(const AF& f);
TranslationOutput tr6(const AF& f);
TranslationOutput tr7(const AF& f);
TranslationOutput tr8(const AF& f);

// Restriction of an extension of the target framework to the original
// arguments.
Extension project(const Extension& e, const TranslationOutput& out);

} // namespace aaf
