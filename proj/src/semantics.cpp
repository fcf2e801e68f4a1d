#include "aaf/semantics.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aaf/digraph.hpp"
#include "aaf/engine.hpp"
#include "aaf/errors.hpp"

namespace aaf {

std::string to_string(SemanticsId s) {
    switch (s) {
    case SemanticsId::grd: return "grd";
    case SemanticsId::adm: return "adm";
    case SemanticsId::stb: return "stb";
    case SemanticsId::com: return "com";
    case SemanticsId::prf: return "prf";
    case SemanticsId::sem: return "sem";
    case SemanticsId::stg: return "stg";
    }
    return "?";
}

std::optional<SemanticsId> semantics_from_string(const std::string& name) {
    for (SemanticsId s : all_semantics)
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

ExtensionSet::ExtensionSet(std::vector<ArgumentId> owner_args, std::vector<Extension> sets)
    : owner_args_(std::move(owner_args)), sets_(std::move(sets)) {
    std::sort(owner_args_.begin(), owner_args_.end());
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ExtensionSet::contains(const Extension& e) const {
    return std::binary_search(sets_.begin(), sets_.end(), e);
}

namespace {

constexpr int kReferenceLimit = 20;
// Above this the subset scan gives way to the backtracking engines.
constexpr int kDispatchLimit = 14;

// Single-word adjacency for the subset scan.
struct MaskGraph {
    int n = 0;
    uint64_t full = 0;
    std::vector<uint64_t> in, out;

    static MaskGraph from(const Digraph& g) {
        MaskGraph m;
        m.n = g.n;
        m.full = (g.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n) - 1);
        m.in.resize(g.n);
        m.out.resize(g.n);
        for (int i = 0; i < g.n; ++i) {
            m.in[i] = g.in[i].word0();
            m.out[i] = g.out[i].word0();
        }
        return m;
    }

    bool conflict_free(uint64_t s) const {
        for (uint64_t t = s; t;) {
            int i = std::countr_zero(t);
            t &= t - 1;
            if (out[i] & s)
                return false;
        }
        return true;
    }
    uint64_t attacked(uint64_t s) const {
        uint64_t acc = 0;
        for (uint64_t t = s; t;) {
            int i = std::countr_zero(t);
            t &= t - 1;
            acc |= out[i];
        }
        return acc;
    }
    uint64_t range(uint64_t s) const { return s | attacked(s); }
    bool all_defended(uint64_t s) const {
        uint64_t att = attacked(s);
        for (uint64_t t = s; t;) {
            int i = std::countr_zero(t);
            t &= t - 1;
            if (in[i] & ~att)
                return false;
        }
        return true;
    }
    uint64_t defended(uint64_t s) const {
        uint64_t att = attacked(s);
        uint64_t def = 0;
        for (int i = 0; i < n; ++i)
            if (!(in[i] & ~att))
                def |= uint64_t(1) << i;
        return def;
    }
};

// All masks satisfying pred, ascending. The parallel variant splits the mask
// interval into per-thread slices and concatenates in slice order, so output
// matches the serial scan.
template <class Pred>
std::vector<uint64_t> scan_masks(uint64_t total, bool parallel, Pred pred) {
    std::vector<uint64_t> result;
#ifdef _OPENMP
    if (parallel && total >= 1024) {
        int threads = omp_get_max_threads();
        std::vector<std::vector<uint64_t>> buckets(threads);
#pragma omp parallel num_threads(threads)
        {
            int t = omp_get_thread_num();
            uint64_t lo = total * t / threads;
            uint64_t hi = total * (t + 1) / threads;
            auto& mine = buckets[t];
            for (uint64_t m = lo; m < hi; ++m)
                if (pred(m))
                    mine.push_back(m);
        }
        for (auto& b : buckets)
            result.insert(result.end(), b.begin(), b.end());
        return result;
    }
#endif
    (void)parallel;
    for (uint64_t m = 0; m < total; ++m)
        if (pred(m))
            result.push_back(m);
    return result;
}

std::vector<uint64_t> subset_maximal(const std::vector<uint64_t>& xs) {
    std::vector<uint64_t> out;
    for (uint64_t x : xs) {
        bool dominated = false;
        for (uint64_t y : xs)
            if (x != y && (x & ~y) == 0) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(x);
    }
    return out;
}

std::vector<uint64_t> subset_minimal(const std::vector<uint64_t>& xs) {
    std::vector<uint64_t> out;
    for (uint64_t x : xs) {
        bool dominates = false;
        for (uint64_t y : xs)
            if (x != y && (y & ~x) == 0) {
                dominates = true;
                break;
            }
        if (!dominates)
            out.push_back(x);
    }
    return out;
}

// Keep sets whose range is not strictly below another candidate's range.
std::vector<uint64_t> range_maximal(const MaskGraph& m, const std::vector<uint64_t>& xs) {
    std::vector<uint64_t> ranges(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        ranges[i] = m.range(xs[i]);
    std::vector<uint64_t> out;
    for (size_t i = 0; i < xs.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < xs.size(); ++j)
            if (ranges[i] != ranges[j] && (ranges[i] & ~ranges[j]) == 0) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(xs[i]);
    }
    return out;
}

std::vector<uint64_t> reference_masks(const MaskGraph& m, SemanticsId sigma, bool parallel) {
    uint64_t total = (m.n >= 64) ? 0 : (uint64_t(1) << m.n);
    auto cf = [&](uint64_t s) { return m.conflict_free(s); };
    auto adm = [&](uint64_t s) { return m.conflict_free(s) && m.all_defended(s); };

    switch (sigma) {
    case SemanticsId::adm:
        return scan_masks(total, parallel, adm);
    case SemanticsId::stb:
        return scan_masks(total, parallel,
                          [&](uint64_t s) { return cf(s) && m.range(s) == m.full; });
    case SemanticsId::com:
        return scan_masks(total, parallel,
                          [&](uint64_t s) { return cf(s) && m.defended(s) == s; });
    case SemanticsId::grd:
        return subset_minimal(scan_masks(
            total, parallel, [&](uint64_t s) { return cf(s) && m.defended(s) == s; }));
    case SemanticsId::prf:
        return subset_maximal(scan_masks(total, parallel, adm));
    case SemanticsId::sem:
        return range_maximal(m, scan_masks(total, parallel, adm));
    case SemanticsId::stg:
        return range_maximal(m, scan_masks(total, parallel, cf));
    }
    return {};
}

ExtensionSet masks_to_set(const AF& f, const Digraph& g, const std::vector<uint64_t>& masks) {
    std::vector<Extension> exts;
    exts.reserve(masks.size());
    for (uint64_t s : masks) {
        Bits b(g.n);
        for (uint64_t t = s; t;) {
            int i = std::countr_zero(t);
            t &= t - 1;
            b.set(i);
        }
        exts.push_back(g.arg_set_of(b));
    }
    return ExtensionSet(f.args(), std::move(exts));
}

ExtensionSet bits_to_set(const AF& f, const Digraph& g, const std::vector<Bits>& masks) {
    std::vector<Extension> exts;
    exts.reserve(masks.size());
    for (const Bits& b : masks)
        exts.push_back(g.arg_set_of(b));
    return ExtensionSet(f.args(), std::move(exts));
}

ExtensionSet reference_impl(const AF& f, SemanticsId sigma, bool parallel) {
    Digraph g = Digraph::from(f);
    if (g.n > kReferenceLimit)
        throw TooLarge("reference solver is limited to " + std::to_string(kReferenceLimit) +
                       " arguments; got " + std::to_string(g.n));
    MaskGraph m = MaskGraph::from(g);
    return masks_to_set(f, g, reference_masks(m, sigma, parallel));
}

ExtensionSet engine_impl(const AF& f, const Digraph& g, SemanticsId sigma) {
    switch (sigma) {
    case SemanticsId::grd: return bits_to_set(f, g, {engine::grounded(g)});
    case SemanticsId::stb: return bits_to_set(f, g, engine::stable(g));
    case SemanticsId::com: return bits_to_set(f, g, engine::complete(g));
    case SemanticsId::prf: return bits_to_set(f, g, engine::preferred(g));
    case SemanticsId::sem: return bits_to_set(f, g, engine::semi_stable(g));
    case SemanticsId::adm: return bits_to_set(f, g, engine::admissible(g));
    case SemanticsId::stg: return bits_to_set(f, g, engine::stage(g));
    }
    return {};
}

} // namespace

namespace reference {

ExtensionSet conflict_free_sets(const AF& f) {
    Digraph g = Digraph::from(f);
    if (g.n > kReferenceLimit)
        throw TooLarge("conflict_free_sets is limited to " + std::to_string(kReferenceLimit) +
                       " arguments");
    MaskGraph m = MaskGraph::from(g);
    return masks_to_set(
        f, g,
        scan_masks(uint64_t(1) << m.n, false, [&](uint64_t s) { return m.conflict_free(s); }));
}

ExtensionSet extensions(const AF& f, SemanticsId sigma) { return reference_impl(f, sigma, false); }

ExtensionSet extensions_parallel(const AF& f, SemanticsId sigma) {
    return reference_impl(f, sigma, true);
}

} // namespace reference

ExtensionSet conflict_free_sets(const AF& f) { return reference::conflict_free_sets(f); }

ExtensionSet extensions(const AF& f, SemanticsId sigma) {
    Digraph g = Digraph::from(f);
    if (g.n <= kDispatchLimit) {
        MaskGraph m = MaskGraph::from(g);
        return masks_to_set(f, g, reference_masks(m, sigma, false));
    }
    return engine_impl(f, g, sigma);
}

ExtensionSet stable_backtracking(const AF& f) {
    Digraph g = Digraph::from(f);
    return bits_to_set(f, g, engine::stable(g));
}

Extension grounded(const AF& f) {
    Digraph g = Digraph::from(f);
    return g.arg_set_of(engine::grounded(g));
}

bool verify(const AF& f, SemanticsId sigma, const Extension& s) {
    Digraph g = Digraph::from(f);
    Bits mask = g.mask_of(s); // throws NotInFramework on foreign members
    switch (sigma) {
    case SemanticsId::grd:
        return mask == engine::grounded(g);
    case SemanticsId::stb:
        return g.conflict_free(mask) && g.range_of(mask) == Bits::full(g.n);
    case SemanticsId::adm:
        return g.conflict_free(mask) && mask.is_subset_of(g.characteristic_of(mask));
    case SemanticsId::com:
        return g.conflict_free(mask) && g.characteristic_of(mask) == mask;
    case SemanticsId::prf:
    case SemanticsId::sem:
    case SemanticsId::stg:
        return extensions(f, sigma).contains(s);
    }
    return false;
}

bool credulous(const AF& f, SemanticsId sigma, const ArgumentId& a) {
    if (!f.contains(a))
        throw NotInFramework(a.text());
    ExtensionSet exts = extensions(f, sigma);
    for (const Extension& e : exts.sets())
        if (e.contains(a))
            return true;
    return false;
}

bool skeptical(const AF& f, SemanticsId sigma, const ArgumentId& a) {
    if (!f.contains(a))
        throw NotInFramework(a.text());
    // vacuously true over an empty family
    ExtensionSet exts = extensions(f, sigma);
    for (const Extension& e : exts.sets())
        if (!e.contains(a))
            return false;
    return true;
}

bool exists(const AF& f, SemanticsId sigma) { return !extensions(f, sigma).empty(); }

bool exists_nonempty(const AF& f, SemanticsId sigma) {
    ExtensionSet exts = extensions(f, sigma);
    for (const Extension& e : exts.sets())
        if (!e.empty())
            return true;
    return false;
}

} // namespace aaf
