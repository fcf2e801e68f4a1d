#include "aaf/properties.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "aaf/errors.hpp"
#include "aaf/generate.hpp"
#include "aaf/io.hpp"

namespace aaf {

std::string to_string(Strength s) {
    switch (s) {
    case Strength::exact: return "exact";
    case Strength::weakly_exact: return "weakly-exact";
    case Strength::faithful: return "faithful";
    case Strength::weakly_faithful: return "weakly-faithful";
    }
    return "?";
}

namespace {

constexpr TranslationId kModular[] = {TranslationId::tr1, TranslationId::tr3, TranslationId::tr5,
                                      TranslationId::tr7};
constexpr TranslationId kNonModular[] = {TranslationId::tr2, TranslationId::tr4,
                                         TranslationId::tr6, TranslationId::tr8};

bool route_flag_modular(const TranslationRoute& r) {
    for (TranslationId id : r.comp)
        if (std::find(std::begin(kModular), std::end(kModular), id) == std::end(kModular))
            return false;
    return true;
}

bool route_flag_embedding(const TranslationRoute& r) {
    for (TranslationId id : r.comp)
        if (id == TranslationId::tr2)
            return false;
    return true;
}

Claim make_claim(SemanticsId src, SemanticsId tgt, TranslationRoute route, Strength st) {
    Claim c;
    c.source = src;
    c.target = tgt;
    c.route = std::move(route);
    c.strength = st;
    c.covering = true;
    c.embedding = route_flag_embedding(c.route);
    c.modular = route_flag_modular(c.route);
    c.monotone = c.modular;
    c.name = to_string(src) + "-" + to_string(tgt) + "-via-" + c.route.name();
    return c;
}

} // namespace

std::vector<Claim> claim_matrix() {
    using S = SemanticsId;
    using T = TranslationId;
    std::vector<Claim> m;
    auto add = [&](S a, S b, TranslationRoute r, Strength st) {
        m.push_back(make_claim(a, b, std::move(r), st));
    };

    add(S::grd, S::adm, {T::tr4, T::tr8}, Strength::weakly_faithful);
    add(S::grd, S::stb, {T::tr8}, Strength::faithful);
    add(S::grd, S::com, {T::tr8}, Strength::faithful);
    add(S::grd, S::prf, {T::tr8}, Strength::faithful);
    add(S::grd, S::sem, {T::tr8}, Strength::faithful);
    add(S::grd, S::stg, {T::tr8}, Strength::faithful);

    add(S::adm, S::stb, {T::tr6}, Strength::faithful);
    add(S::adm, S::com, {T::tr1}, Strength::exact);
    add(S::adm, S::prf, {T::tr4, T::tr6}, Strength::weakly_faithful);
    add(S::adm, S::sem, {T::tr6}, Strength::faithful);
    add(S::adm, S::stg, {T::tr6}, Strength::faithful);

    add(S::stb, S::adm, {T::tr4}, Strength::weakly_exact);
    add(S::stb, S::com, {T::tr4}, Strength::weakly_exact);
    add(S::stb, S::prf, {T::tr4}, Strength::weakly_exact);
    add(S::stb, S::sem, {T::tr3}, Strength::weakly_exact);
    add(S::stb, S::sem, {T::tr4}, Strength::weakly_exact);
    add(S::stb, S::stg, {T::tr3}, Strength::weakly_exact);

    add(S::com, S::adm, {T::tr4, T::tr7}, Strength::weakly_faithful);
    add(S::com, S::stb, {T::tr7}, Strength::faithful);
    add(S::com, S::prf, {T::tr4, T::tr7}, Strength::weakly_faithful);
    add(S::com, S::sem, {T::tr7}, Strength::faithful);
    add(S::com, S::stg, {T::tr7}, Strength::faithful);

    add(S::prf, S::sem, {T::tr1}, Strength::exact);

    add(S::stg, S::sem, {T::tr2}, Strength::exact);

    return m;
}

namespace {

std::vector<Extension> remove_remainder(const std::vector<Extension>& sets,
                                        const std::vector<Extension>& remainder) {
    std::vector<Extension> kept;
    kept.reserve(sets.size());
    for (const Extension& e : sets) {
        bool is_rem = false;
        for (const Extension& r : remainder)
            if (e == r) {
                is_rem = true;
                break;
            }
        if (!is_rem)
            kept.push_back(e);
    }
    return kept;
}

bool faithful_cmp(const ExtensionSet& src, const std::vector<Extension>& tgt_sets,
                  const std::vector<ArgumentId>& orig) {
    if (src.size() != tgt_sets.size())
        return false;
    std::vector<Extension> projected;
    projected.reserve(tgt_sets.size());
    for (const Extension& e : tgt_sets) {
        std::vector<ArgumentId> kept;
        for (const auto& a : e.members())
            if (std::binary_search(orig.begin(), orig.end(), a))
                kept.push_back(a);
        projected.push_back(Extension(std::move(kept)));
    }
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    return projected == src.sets();
}

} // namespace

bool strength_holds(Strength st, const ExtensionSet& source_exts, const ExtensionSet& target_exts,
                    const std::vector<ArgumentId>& original_args,
                    const std::vector<Extension>& remainder) {
    switch (st) {
    case Strength::exact:
        return source_exts.sets() == target_exts.sets();
    case Strength::weakly_exact:
        return source_exts.sets() == remove_remainder(target_exts.sets(), remainder);
    case Strength::faithful:
        return faithful_cmp(source_exts, target_exts.sets(), original_args);
    case Strength::weakly_faithful:
        return faithful_cmp(source_exts, remove_remainder(target_exts.sets(), remainder),
                            original_args);
    }
    return false;
}

bool check_exact(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                 SemanticsId sigma_prime) {
    return strength_holds(Strength::exact, extensions(f, sigma), extensions(out.target, sigma_prime),
                          out.original_args, out.remainder);
}

bool check_weakly_exact(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                        SemanticsId sigma_prime) {
    return strength_holds(Strength::weakly_exact, extensions(f, sigma),
                          extensions(out.target, sigma_prime), out.original_args, out.remainder);
}

bool check_faithful(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                    SemanticsId sigma_prime) {
    return strength_holds(Strength::faithful, extensions(f, sigma),
                          extensions(out.target, sigma_prime), out.original_args, out.remainder);
}

bool check_weakly_faithful(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                           SemanticsId sigma_prime) {
    return strength_holds(Strength::weakly_faithful, extensions(f, sigma),
                          extensions(out.target, sigma_prime), out.original_args, out.remainder);
}

bool check_covering(const AF& f, const TranslationOutput& out) {
    return is_subframework(f, out.target);
}

bool check_embedding(const AF& f, const TranslationOutput& out) {
    ArgSet orig(f.args());
    for (const auto& a : f.args())
        if (!out.target.contains(a))
            return false;
    std::vector<Attack> induced;
    for (const auto& [x, y] : out.target.attacks())
        if (orig.contains(x) && orig.contains(y))
            induced.push_back({x, y});
    return induced == f.attacks();
}

bool check_monotone_pair(const AF& f, const AF& g, const TranslationRoute& route) {
    if (!is_subframework(f, g))
        throw BadParameter("monotone check needs f to be a subframework of g");
    return is_subframework(translate(f, route).target, translate(g, route).target);
}

bool check_modular_pair(const AF& f, const AF& g, TranslationId id) {
    AF lhs = union_of(translate(f, id).target, translate(g, id).target);
    AF rhs = translate(union_of(f, g), id).target;
    return lhs == rhs;
}

std::vector<WitnessPair> nonmodular_witnesses() {
    auto a = ArgumentId::plain("a");
    auto b = ArgumentId::plain("b");
    auto c = ArgumentId::plain("c");
    std::vector<WitnessPair> w;
    w.push_back({TranslationId::tr2, AF({a}, {{a, a}}), AF({b}, {})});
    w.push_back({TranslationId::tr4, AF({a}, {}), AF({b}, {})});
    w.push_back({TranslationId::tr6, AF({b, c}, {{b, c}}), AF({a, b}, {{a, b}})});
    w.push_back({TranslationId::tr8, AF({a}, {}), AF({b, c}, {{b, c}})});
    return w;
}

std::string to_json_line(const CheckReport& r) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["instances"] = r.instances;
    j["failures"] = r.failure_count;
    j["pass"] = r.pass();
    j["elapsed_s"] = r.elapsed_s;
    auto samples = nlohmann::json::array();
    for (const auto& f : r.failures)
        samples.push_back({{"af", f.apx}, {"detail", f.detail}});
    j["failure_samples"] = samples;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Sweep driver
// ---------------------------------------------------------------------------

namespace {

constexpr size_t kMaxStoredFailures = 16;

struct ReportSlot {
    explicit ReportSlot(std::string n) : name(std::move(n)) {}
    std::string name;
    uint64_t instances = 0;
    uint64_t failure_count = 0;
    std::vector<std::pair<uint64_t, Failure>> failures; // instance index, failure
    double elapsed_s = 0.0;
    bool active = true;
};

bool name_selected(const std::string& name, const std::vector<std::string>& only) {
    if (only.empty())
        return true;
    for (const auto& f : only)
        if (name == f || (f == "all") || name.rfind(f, 0) == 0)
            return true;
    return false;
}

bool has_asymmetric_attack(const AF& f) {
    for (const auto& [a, b] : f.attacks())
        if (!(a == b) && !f.has_attack(b, a))
            return true;
    return false;
}

bool family_subset(const ExtensionSet& a, const ExtensionSet& b) {
    for (const Extension& e : a.sets())
        if (!b.contains(e))
            return false;
    return true;
}

std::vector<AF> build_instances(const SweepConfig& cfg) {
    std::vector<AF> out;
    if (cfg.exhaustive_n > 0) {
        auto all = enumerate_all_afs(cfg.exhaustive_n, cfg.exhaustive_n >= 4);
        out.insert(out.end(), all.begin(), all.end());
    }
    SplitMix64 rng(cfg.seed);
    for (int n : cfg.sizes)
        for (double p : cfg.ps)
            for (int k = 0; k < cfg.samples_per_cell; ++k)
                out.push_back(random_af(n, p, rng.next()));
    return out;
}

struct InstanceResult {
    // (report index, failure); instance index attached during merge
    std::vector<std::pair<size_t, Failure>> failures;
    std::vector<double> claim_seconds;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::vector<CheckReport> run_claims(const SweepConfig& cfg) {
    const std::vector<Claim> claims = claim_matrix();

    // report layout: claims, structural, laws, ladder, pair-based
    std::vector<ReportSlot> slots;
    for (const Claim& c : claims)
        slots.push_back(ReportSlot(c.name));
    const size_t idx_covering = slots.size();
    slots.push_back(ReportSlot("structural-covering"));
    const size_t idx_embedding = slots.size();
    slots.push_back(ReportSlot("structural-embedding"));
    const size_t idx_laws = slots.size();
    slots.push_back(ReportSlot("semantics-laws"));
    const size_t idx_ladder = slots.size();
    slots.push_back(ReportSlot("strength-ladder"));
    const size_t idx_modular0 = slots.size();
    for (TranslationId id : kModular)
        slots.push_back(ReportSlot("modular-" + to_string(id)));
    const size_t idx_monotone0 = slots.size();
    for (TranslationId id : kModular)
        slots.push_back(ReportSlot("monotone-" + to_string(id)));
    const size_t idx_witness0 = slots.size();
    for (TranslationId id : kNonModular)
        slots.push_back(ReportSlot("nonmodular-witness-" + to_string(id)));

    for (auto& s : slots)
        s.active = name_selected(s.name, cfg.only);

    std::vector<bool> claim_active(claims.size());
    bool any_claim = false;
    for (size_t i = 0; i < claims.size(); ++i) {
        claim_active[i] = slots[i].active || slots[idx_ladder].active;
        any_claim = any_claim || claim_active[i];
    }
    const bool need_structural =
        cfg.structural && (slots[idx_covering].active || slots[idx_embedding].active);
    const bool need_laws = cfg.laws && slots[idx_laws].active;

    const std::vector<AF> instances =
        (any_claim || need_structural || need_laws) ? build_instances(cfg) : std::vector<AF>{};

    // unique routes over active claims, plus all singles for the structural scan
    std::vector<TranslationRoute> routes;
    auto want_route = [&](const TranslationRoute& r) {
        for (const auto& existing : routes)
            if (existing == r)
                return;
        routes.push_back(r);
    };
    for (size_t i = 0; i < claims.size(); ++i)
        if (claim_active[i])
            want_route(claims[i].route);
    if (need_structural)
        for (TranslationId id : all_translations)
            want_route(TranslationRoute{id});

    std::vector<InstanceResult> results(instances.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (cfg.parallel)
#endif
    for (size_t idx = 0; idx < instances.size(); ++idx) {
        const AF& f = instances[idx];
        InstanceResult& res = results[idx];
        res.claim_seconds.assign(slots.size(), 0.0);
        auto fail = [&](size_t slot, const std::string& detail) {
            res.failures.push_back({slot, Failure{serialize_apx(f), detail}});
        };

        // source-side extension families (cheap: instances are small)
        std::map<SemanticsId, ExtensionSet> src;
        for (SemanticsId s : all_semantics)
            src.emplace(s, extensions(f, s));

        // translated frameworks, shared across claims
        std::map<std::string, TranslationOutput> outs;
        for (const auto& r : routes)
            outs.emplace(r.name(), translate(f, r));
        std::map<std::string, ExtensionSet> target_sets;
        auto target_set = [&](const TranslationOutput& out, SemanticsId s) -> const ExtensionSet& {
            std::string key = out.route.name() + "/" + to_string(s);
            auto it = target_sets.find(key);
            if (it == target_sets.end())
                it = target_sets.emplace(key, extensions(out.target, s)).first;
            return it->second;
        };

        for (size_t ci = 0; ci < claims.size(); ++ci) {
            if (!claim_active[ci])
                continue;
            const Claim& c = claims[ci];
            auto t0 = std::chrono::steady_clock::now();
            const TranslationOutput& out = outs.at(c.route.name());
            const ExtensionSet& source_exts = src.at(c.source);
            const ExtensionSet& tgt = target_set(out, c.target);
            bool ok = strength_holds(c.strength, source_exts, tgt, out.original_args,
                                     out.remainder);
            if (slots[ci].active && !ok)
                fail(ci, c.name + " violated: |source|=" + std::to_string(source_exts.size()) +
                             " |target|=" + std::to_string(tgt.size()));
            if (slots[idx_ladder].active) {
                // exact => weakly exact (empty remainder) => weakly faithful;
                // faithful => weakly faithful
                bool v_exact = strength_holds(Strength::exact, source_exts, tgt,
                                              out.original_args, {});
                bool v_wexact = strength_holds(Strength::weakly_exact, source_exts, tgt,
                                               out.original_args, {});
                bool v_faithful = strength_holds(Strength::faithful, source_exts, tgt,
                                                 out.original_args, {});
                bool v_wfaithful = strength_holds(Strength::weakly_faithful, source_exts, tgt,
                                                  out.original_args, {});
                bool ladder_ok = (!v_exact || (v_wexact && v_faithful)) &&
                                 (!v_wexact || v_wfaithful) && (!v_faithful || v_wfaithful);
                if (!ladder_ok)
                    fail(idx_ladder, "strength implications broken on " + c.name);
            }
            res.claim_seconds[ci] += seconds_since(t0);
        }

        if (need_structural) {
            auto t0 = std::chrono::steady_clock::now();
            for (TranslationId id : all_translations) {
                const TranslationOutput& out = outs.at(TranslationRoute{id}.name());
                if (slots[idx_covering].active && !check_covering(f, out))
                    fail(idx_covering, to_string(id) + " not covering");
                if (slots[idx_embedding].active) {
                    bool emb = check_embedding(f, out);
                    if (id == TranslationId::tr2) {
                        if (has_asymmetric_attack(f) && emb)
                            fail(idx_embedding, "tr2 embedding despite asymmetric attack");
                    } else if (!emb) {
                        fail(idx_embedding, to_string(id) + " not embedding");
                    }
                }
            }
            res.claim_seconds[idx_covering] += seconds_since(t0);
        }

        if (need_laws) {
            auto t0 = std::chrono::steady_clock::now();
            const auto& stb = src.at(SemanticsId::stb);
            const auto& sem = src.at(SemanticsId::sem);
            const auto& prf = src.at(SemanticsId::prf);
            const auto& com = src.at(SemanticsId::com);
            const auto& adm = src.at(SemanticsId::adm);
            const auto& stg = src.at(SemanticsId::stg);
            const auto& grd = src.at(SemanticsId::grd);
            if (!(family_subset(stb, sem) && family_subset(sem, prf) && family_subset(prf, com) &&
                  family_subset(com, adm)))
                fail(idx_laws, "inclusion chain stb/sem/prf/com/adm broken");
            if (!stb.empty() && !(stb == sem && stb == stg))
                fail(idx_laws, "stable/semi-stable/stage coincidence broken");
            bool grd_ok = grd.size() == 1;
            if (grd_ok) {
                const Extension& g0 = grd.sets().front();
                grd_ok = com.contains(g0);
                for (const Extension& cset : com.sets())
                    grd_ok = grd_ok && g0.is_subset_of(cset);
            }
            if (!grd_ok)
                fail(idx_laws, "grounded is not the unique subset-minimum of com");
            res.claim_seconds[idx_laws] += seconds_since(t0);
        }
    }

    // merge
    for (size_t idx = 0; idx < results.size(); ++idx) {
        for (auto& [slot, failure] : results[idx].failures) {
            slots[slot].failure_count++;
            if (slots[slot].failures.size() < kMaxStoredFailures)
                slots[slot].failures.push_back({idx, failure});
        }
        if (!results[idx].claim_seconds.empty())
            for (size_t s = 0; s < slots.size(); ++s)
                slots[s].elapsed_s += results[idx].claim_seconds[s];
    }
    for (size_t ci = 0; ci < claims.size(); ++ci)
        slots[ci].instances = slots[ci].active ? instances.size() : 0;
    slots[idx_covering].instances = need_structural ? instances.size() : 0;
    slots[idx_embedding].instances = need_structural ? instances.size() : 0;
    slots[idx_laws].instances = need_laws ? instances.size() : 0;
    slots[idx_ladder].instances = slots[idx_ladder].active ? instances.size() : 0;

    // sampled pairs for modularity and monotonicity
    bool need_pairs = false;
    for (size_t k = 0; k < 4; ++k)
        need_pairs = need_pairs || slots[idx_modular0 + k].active || slots[idx_monotone0 + k].active;
    if (need_pairs && cfg.modular_pairs > 0) {
        SplitMix64 rng(cfg.seed ^ 0xABCDEF12345ULL);
        for (int k = 0; k < cfg.modular_pairs; ++k) {
            int n1 = 1 + static_cast<int>(rng.below(4));
            int n2 = 1 + static_cast<int>(rng.below(4));
            AF f = random_af(n1, 0.3, rng.next());
            AF g = random_af(n2, 0.4, rng.next());
            // monotone pair: f together with a random superframework
            AF sup = union_of(f, random_af(n1 + static_cast<int>(rng.below(3)), 0.3, rng.next()));
            for (size_t m = 0; m < 4; ++m) {
                TranslationId id = kModular[m];
                auto t0 = std::chrono::steady_clock::now();
                if (slots[idx_modular0 + m].active) {
                    slots[idx_modular0 + m].instances++;
                    if (!check_modular_pair(f, g, id)) {
                        slots[idx_modular0 + m].failure_count++;
                        if (slots[idx_modular0 + m].failures.size() < kMaxStoredFailures)
                            slots[idx_modular0 + m].failures.push_back(
                                {uint64_t(k), Failure{serialize_apx(f) + "---\n" + serialize_apx(g),
                                                      to_string(id) + " not modular on pair"}});
                    }
                }
                if (slots[idx_monotone0 + m].active) {
                    slots[idx_monotone0 + m].instances++;
                    if (!check_monotone_pair(f, sup, TranslationRoute{id})) {
                        slots[idx_monotone0 + m].failure_count++;
                        if (slots[idx_monotone0 + m].failures.size() < kMaxStoredFailures)
                            slots[idx_monotone0 + m].failures.push_back(
                                {uint64_t(k),
                                 Failure{serialize_apx(f) + "---\n" + serialize_apx(sup),
                                         to_string(id) + " not monotone on pair"}});
                    }
                }
                slots[idx_modular0 + m].elapsed_s += seconds_since(t0);
            }
        }
    }

    // pinned witnesses must keep failing modularity
    auto witnesses = nonmodular_witnesses();
    for (size_t w = 0; w < witnesses.size(); ++w) {
        ReportSlot& slot = slots[idx_witness0 + w];
        if (!slot.active)
            continue;
        auto t0 = std::chrono::steady_clock::now();
        slot.instances = 1;
        if (check_modular_pair(witnesses[w].f, witnesses[w].g, witnesses[w].id)) {
            slot.failure_count++;
            slot.failures.push_back(
                {0, Failure{serialize_apx(witnesses[w].f) + "---\n" + serialize_apx(witnesses[w].g),
                            to_string(witnesses[w].id) + " unexpectedly modular on witness"}});
        }
        slot.elapsed_s += seconds_since(t0);
    }

    std::vector<CheckReport> reports;
    for (auto& s : slots) {
        if (!s.active)
            continue;
        CheckReport r;
        r.claim = s.name;
        r.instances = s.instances;
        r.failure_count = s.failure_count;
        std::sort(s.failures.begin(), s.failures.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [i, failure] : s.failures)
            r.failures.push_back(std::move(failure));
        r.elapsed_s = s.elapsed_s;
        reports.push_back(std::move(r));
    }
    return reports;
}

ExtensionSet translated_route_extensions(const AF& f, SemanticsId target_sem,
                                         const TranslationRoute& route) {
    TranslationOutput out = translate(f, route);
    std::vector<Extension> projected;
    ExtensionSet target_exts = extensions(out.target, target_sem);
    for (const Extension& e : target_exts.sets()) {
        bool is_rem = false;
        for (const Extension& r : out.remainder)
            if (e == r) {
                is_rem = true;
                break;
            }
        if (!is_rem)
            projected.push_back(project(e, out));
    }
    return ExtensionSet(f.args(), std::move(projected));
}

CheckReport explore_claim(SemanticsId source, SemanticsId target, const TranslationRoute& route,
                          Strength strength, const SweepConfig& cfg) {
    CheckReport r;
    r.claim = to_string(source) + "-" + to_string(target) + "-via-" + route.name() + "[" +
              to_string(strength) + "]";
    auto t0 = std::chrono::steady_clock::now();
    for (const AF& f : build_instances(cfg)) {
        r.instances++;
        TranslationOutput out = translate(f, route);
        bool ok = strength_holds(strength, extensions(f, source), extensions(out.target, target),
                                 out.original_args, out.remainder);
        if (!ok) {
            r.failure_count++;
            if (r.failures.size() < kMaxStoredFailures)
                r.failures.push_back({serialize_apx(f), "claim violated"});
        }
    }
    r.elapsed_s = seconds_since(t0);
    return r;
}

} // namespace aaf
