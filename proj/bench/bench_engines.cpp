// Compares the serial subset-scan reference against the OpenMP variant and
// the backtracking engines: same families, different running time.

#include <chrono>
#include <iostream>

#include "aaf/generate.hpp"
#include "aaf/properties.hpp"
#include "aaf/semantics.hpp"

using namespace aaf;

namespace {

template <class F>
double time_call(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 14;
    int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    std::cout << "subset scan on random frameworks, n=" << n << ", " << reps << " reps\n";
    for (SemanticsId s : {SemanticsId::adm, SemanticsId::stb, SemanticsId::stg}) {
        SplitMix64 rng(7);
        double serial = 0, parallel = 0;
        bool agree = true;
        for (int k = 0; k < reps; ++k) {
            AF f = random_af(n, 0.25, rng.next());
            ExtensionSet a, b;
            serial += time_call([&] { a = reference::extensions(f, s); });
            parallel += time_call([&] { b = reference::extensions_parallel(f, s); });
            agree = agree && a == b;
        }
        std::cout << "  " << to_string(s) << ": serial " << serial << "s, omp " << parallel
                  << "s, speedup " << serial / parallel << (agree ? "" : "  MISMATCH") << "\n";
    }

    std::cout << "backtracking vs scan, stable semantics, n=" << n << "\n";
    {
        SplitMix64 rng(13);
        double scan = 0, engine = 0;
        bool agree = true;
        for (int k = 0; k < reps; ++k) {
            AF f = random_af(n, 0.25, rng.next());
            ExtensionSet a, b;
            scan += time_call([&] { a = reference::extensions(f, SemanticsId::stb); });
            engine += time_call([&] { b = stable_backtracking(f); });
            agree = agree && a == b;
        }
        std::cout << "  scan " << scan << "s, engine " << engine << "s, speedup " << scan / engine
                  << (agree ? "" : "  MISMATCH") << "\n";
    }

    std::cout << "claim sweep over all 512 three-argument frameworks\n";
    {
        SweepConfig cfg;
        cfg.exhaustive_n = 3;
        cfg.modular_pairs = 0;
        cfg.structural = false;
        cfg.laws = false;
        cfg.parallel = false;
        double serial = time_call([&] { run_claims(cfg); });
        cfg.parallel = true;
        double parallel = time_call([&] { run_claims(cfg); });
        std::cout << "  serial " << serial << "s, omp " << parallel << "s, speedup "
                  << serial / parallel << "\n";
    }
    return 0;
}
