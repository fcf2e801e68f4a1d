#include "doctest.h"

#include <algorithm>

#include "aaf/digraph.hpp"
#include "aaf/engine.hpp"
#include "aaf/generate.hpp"
#include "aaf/semantics.hpp"
#include "aaf/translations.hpp"

#include "test_util.hpp"

using namespace aaf;
using namespace testutil;

namespace {

ExtensionSet engine_family(const AF& f, SemanticsId s) {
    Digraph g = Digraph::from(f);
    std::vector<Bits> masks;
    switch (s) {
    case SemanticsId::grd: masks = {engine::grounded(g)}; break;
    case SemanticsId::stb: masks = engine::stable(g); break;
    case SemanticsId::com: masks = engine::complete(g); break;
    case SemanticsId::prf: masks = engine::preferred(g); break;
    case SemanticsId::sem: masks = engine::semi_stable(g); break;
    case SemanticsId::adm: masks = engine::admissible(g); break;
    case SemanticsId::stg: masks = engine::stage(g); break;
    }
    std::vector<Extension> exts;
    for (const Bits& m : masks)
        exts.push_back(g.arg_set_of(m));
    return ExtensionSet(f.args(), std::move(exts));
}

} // namespace

TEST_CASE("every engine agrees with the reference exhaustively at n = 3") {
    for (const AF& f : enumerate_all_afs(3))
        for (SemanticsId s : all_semantics)
            CHECK(engine_family(f, s) == reference::extensions(f, s));
}

TEST_CASE("engines agree with the reference on random frameworks") {
    SplitMix64 rng(1234);
    for (int k = 0; k < 150; ++k) {
        int n = 4 + static_cast<int>(rng.below(5)); // 4..8
        double p = (k % 3 == 0) ? 0.15 : (k % 3 == 1 ? 0.3 : 0.5);
        AF f = random_af(n, p, rng.next());
        for (SemanticsId s : all_semantics)
            CHECK(engine_family(f, s) == reference::extensions(f, s));
    }
}

TEST_CASE("stable backtracking agrees with brute force on seeded samples") {
    SplitMix64 rng(77);
    for (int k = 0; k < 300; ++k) {
        double p = (k % 3 == 0) ? 0.15 : (k % 3 == 1 ? 0.3 : 0.5);
        AF f = random_af(6, p, rng.next());
        CHECK(stable_backtracking(f) == reference::extensions(f, SemanticsId::stb));
    }
}

TEST_CASE("stable backtracking on fixed frameworks") {
    AF ex1 = example1();
    CHECK(stable_backtracking(ex1) == family(ex1, {ext({"a", "d"})}));
    AF self = af({"a"}, {{"a", "a"}});
    CHECK(stable_backtracking(self).empty());
}

TEST_CASE("translated frameworks stay solvable") {
    AF ex1 = example1();

    // one stable extension of the complete-to-stable target per complete
    // extension of the source
    TranslationOutput t7 = translate(ex1, TranslationId::tr7);
    CHECK(stable_backtracking(t7.target).size() == 3);

    // stage-to-semi-stable target of the nine-argument framework: projecting
    // its semi-stable family onto the original arguments recovers stage
    AF hard = counterexample_af();
    TranslationOutput t5 = translate(hard, TranslationId::tr5);
    CHECK(t5.target.arg_count() == 27);
    ExtensionSet semt = extensions(t5.target, SemanticsId::sem);
    std::vector<Extension> projected;
    for (const Extension& e : semt.sets())
        projected.push_back(project(e, t5));
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    CHECK(ExtensionSet(hard.args(), projected) == extensions(hard, SemanticsId::stg));

    // grounded-to-anything target: all six families coincide
    TranslationOutput t8 = translate(ex1, TranslationId::tr8);
    ExtensionSet stb = extensions(t8.target, SemanticsId::stb);
    CHECK(stb.size() == 1);
    CHECK(stb == extensions(t8.target, SemanticsId::com));
    CHECK(stb == extensions(t8.target, SemanticsId::prf));
    CHECK(stb == extensions(t8.target, SemanticsId::sem));
    CHECK(stb == extensions(t8.target, SemanticsId::stg));
    CHECK(stb.sets().front() == grounded(t8.target));
}

TEST_CASE("grounded fixpoint on larger random frameworks") {
    SplitMix64 rng(99);
    for (int k = 0; k < 50; ++k) {
        AF f = random_af(30, 0.1, rng.next());
        Extension g = grounded(f);
        // fixpoint property
        CHECK(characteristic(f, g) == g);
        CHECK(verify(f, SemanticsId::grd, g));
    }
}
