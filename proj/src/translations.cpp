#include "aaf/translations.hpp"

#include <algorithm>
#include <sstream>

#include "aaf/errors.hpp"

namespace aaf {

std::string to_string(TranslationId id) {
    switch (id) {
    case TranslationId::tr1: return "tr1";
    case TranslationId::tr2: return "tr2";
    case TranslationId::tr3: return "tr3";
    case TranslationId::tr4: return "tr4";
    case TranslationId::tr5: return "tr5";
    case TranslationId::tr6: return "tr6";
    case TranslationId::tr7: return "tr7";
    case TranslationId::tr8: return "tr8";
    }
    return "?";
}

std::optional<TranslationId> translation_from_string(const std::string& name) {
    for (TranslationId id : all_translations)
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

std::string TranslationRoute::name() const {
    std::ostringstream out;
    for (size_t i = 0; i < comp.size(); ++i) {
        if (i)
            out << ".";
        out << to_string(comp[i]);
    }
    return out.str();
}

std::optional<TranslationRoute> TranslationRoute::parse(const std::string& token) {
    TranslationRoute route;
    std::string part;
    std::istringstream in(token);
    while (std::getline(in, part, '.')) {
        auto id = translation_from_string(part);
        if (!id)
            return std::nullopt;
        route.comp.push_back(*id);
    }
    if (route.comp.empty())
        return std::nullopt;
    return route;
}

namespace {

struct Step {
    AF target;
    std::vector<Extension> remainder;
};

Step build_tr1(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    for (const auto& a : f.args()) {
        ArgumentId p = ArgumentId::primed(a);
        args.push_back(p);
        attacks.push_back({a, p});
        attacks.push_back({p, a});
        attacks.push_back({p, p});
    }
    return {AF(std::move(args), std::move(attacks)), {}};
}

Step build_tr2(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    for (const auto& [a, b] : f.attacks()) {
        attacks.push_back({b, a});
        attacks.push_back({a, ArgumentId::primed(b)});
    }
    for (const auto& [b, b2] : f.attacks())
        if (b == b2)
            for (const auto& a : f.args())
                attacks.push_back({a, b});
    for (const auto& a : f.args()) {
        ArgumentId p = ArgumentId::primed(a);
        args.push_back(p);
        attacks.push_back({a, p});
        attacks.push_back({p, p});
    }
    return {AF(std::move(args), std::move(attacks)), {}};
}

Step build_tr3(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    ArgumentId t = ArgumentId::special_t();
    args.push_back(t);
    for (const auto& a : f.args()) {
        attacks.push_back({t, a});
        attacks.push_back({a, t});
    }
    return {AF(std::move(args), std::move(attacks)),
            {Extension(std::vector<ArgumentId>{t})}};
}

Step build_tr4(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    for (const auto& b : f.args()) {
        ArgumentId p = ArgumentId::primed(b);
        args.push_back(p);
        for (const auto& a : f.args())
            attacks.push_back({p, a});
        attacks.push_back({p, p});
        attacks.push_back({b, p});
    }
    for (const auto& [a, b] : f.attacks())
        attacks.push_back({a, ArgumentId::primed(b)});
    return {AF(std::move(args), std::move(attacks)), {Extension{}}};
}

Step build_tr5(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    for (const auto& a : f.args()) {
        ArgumentId bar = ArgumentId::barred(a);
        ArgumentId p = ArgumentId::primed(a);
        args.push_back(bar);
        args.push_back(p);
        attacks.push_back({a, bar});
        attacks.push_back({bar, a});
        attacks.push_back({a, p});
        attacks.push_back({p, p});
    }
    for (const auto& [a, b] : f.attacks())
        attacks.push_back({a, ArgumentId::primed(b)});
    return {AF(std::move(args), std::move(attacks)), {}};
}

Step build_tr6(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    for (const auto& a : f.args()) {
        ArgumentId bar = ArgumentId::barred(a);
        args.push_back(bar);
        attacks.push_back({a, bar});
        attacks.push_back({bar, a});
    }
    for (const auto& [y, a] : f.attacks()) {
        ArgumentId r = ArgumentId::attack_argument(y, a);
        args.push_back(r);
        attacks.push_back({r, r});
        attacks.push_back({ArgumentId::barred(a), r});
    }
    // x attacks (z,y) whenever x attacks z: x defends y against z
    for (const auto& [z, y] : f.attacks()) {
        ArgumentId r = ArgumentId::attack_argument(z, y);
        for (const auto& [x, z2] : f.attacks())
            if (z2 == z)
                attacks.push_back({x, r});
    }
    return {AF(std::move(args), std::move(attacks)), {}};
}

Step build_tr7(const AF& f) {
    std::vector<ArgumentId> args = f.args();
    std::vector<Attack> attacks = f.attacks();
    for (const auto& a : f.args()) {
        ArgumentId bar = ArgumentId::barred(a);
        ArgumentId circ = ArgumentId::circled(a);
        ArgumentId barcirc = ArgumentId::bar_circled(a);
        ArgumentId p = ArgumentId::primed(a);
        args.push_back(bar);
        args.push_back(circ);
        args.push_back(barcirc);
        args.push_back(p);
        attacks.push_back({a, bar});
        attacks.push_back({bar, a});
        attacks.push_back({barcirc, circ});
        attacks.push_back({a, p});
        attacks.push_back({p, p});
    }
    for (const auto& [a, b] : f.attacks()) {
        attacks.push_back({a, ArgumentId::bar_circled(b)});
        attacks.push_back({ArgumentId::bar_circled(a), ArgumentId::primed(b)});
    }
    for (const auto& [b, a] : f.attacks()) {
        ArgumentId r = ArgumentId::attack_argument(b, a);
        args.push_back(r);
        attacks.push_back({r, r});
        attacks.push_back({ArgumentId::barred(a), r});
        attacks.push_back({ArgumentId::circled(b), r});
    }
    return {AF(std::move(args), std::move(attacks)), {}};
}

Step build_tr8(const AF& f) {
    int l = (f.arg_count() + 1) / 2;
    auto in_arg = [&](const ArgumentId& a, int i) {
        return i == l ? a : ArgumentId::layered(a, i);
    };
    auto out_arg = [&](const ArgumentId& a, int i) { return ArgumentId::bar_circ_layered(a, i); };

    std::vector<ArgumentId> args;
    for (int i = 1; i <= l; ++i)
        for (const auto& a : f.args()) {
            args.push_back(in_arg(a, i));
            args.push_back(out_arg(a, i));
        }
    std::vector<Attack> attacks = f.attacks(); // layer l carries the original relation
    for (const auto& [a, b] : f.attacks()) {
        for (int i = 1; i <= l; ++i)
            attacks.push_back({out_arg(a, i), in_arg(b, i)});
        for (int i = 1; i + 1 <= l; ++i)
            attacks.push_back({in_arg(a, i), out_arg(b, i + 1)});
    }
    return {AF(std::move(args), std::move(attacks)), {}};
}

Step build(const AF& f, TranslationId id) {
    switch (id) {
    case TranslationId::tr1: return build_tr1(f);
    case TranslationId::tr2: return build_tr2(f);
    case TranslationId::tr3: return build_tr3(f);
    case TranslationId::tr4: return build_tr4(f);
    case TranslationId::tr5: return build_tr5(f);
    case TranslationId::tr6: return build_tr6(f);
    case TranslationId::tr7: return build_tr7(f);
    case TranslationId::tr8: return build_tr8(f);
    }
    throw BadParameter("unknown translation");
}

void require_plain(const AF& f) {
    for (const auto& a : f.args())
        if (!a.is_plain())
            throw ReservedName(a.text());
}

TranslationOutput run_route(const AF& f, TranslationRoute route) {
    require_plain(f);
    AF current = f;
    std::vector<Extension> remainder;
    for (auto it = route.comp.rbegin(); it != route.comp.rend(); ++it) {
        Step step = build(current, *it);
        current = std::move(step.target);
        remainder = std::move(step.remainder); // the last applied step's sets survive
    }
    return {std::move(current), f.args(), std::move(remainder), std::move(route)};
}

} // namespace

TranslationOutput translate(const AF& f, TranslationId id) { return run_route(f, {id}); }

TranslationOutput translate(const AF& f, const TranslationRoute& route) {
    if (route.comp.empty())
        throw BadParameter("empty translation route");
    return run_route(f, route);
}

TranslationOutput tr1(const AF& f) { return translate(f, TranslationId::tr1); }
TranslationOutput tr2(const AF& f) { return translate(f, TranslationId::tr2); }
TranslationOutput tr3(const AF& f) { return translate(f, TranslationId::tr3); }
TranslationOutput tr4(const AF& f) { return translate(f, TranslationId::tr4); }
TranslationOutput tr5(const AF& f) { return translate(f, TranslationId::tr5); }
TranslationOutput tr6(const AF& f) { return translate(f, TranslationId::tr6); }
TranslationOutput tr7(const AF& f) { return translate(f, TranslationId::tr7); }
TranslationOutput tr8(const AF& f) { return translate(f, TranslationId::tr8); }

Extension project(const Extension& e, const TranslationOutput& out) {
    std::vector<ArgumentId> kept;
    for (const auto& a : e.members()) {
        if (!out.target.contains(a))
            throw NotInFramework(a.text());
        if (std::binary_search(out.original_args.begin(), out.original_args.end(), a))
            kept.push_back(a);
    }
    return Extension(std::move(kept));
}

} // namespace aaf
