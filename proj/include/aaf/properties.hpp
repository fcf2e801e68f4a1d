#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aaf/semantics.hpp"
#include "aaf/translations.hpp"

namespace aaf {

enum class Strength { exact, weakly_exact, faithful, weakly_faithful };

std::string to_string(Strength s);

// One positive entry of the built-in claim table: evaluating the route's
// target framework under `target` semantics recovers the `source` semantics
// of the input, at the stated strength.
struct Claim {
    SemanticsId source;
    SemanticsId target;
    TranslationRoute route;
    Strength strength;
    // structural properties the route is expected to satisfy
    bool covering = false;
    bool embedding = false;
    bool modular = false;
    bool monotone = false;
    std::string name; // e.g. "adm-com-via-tr1"
};

std::vector<Claim> claim_matrix();

// Semantic checkers per Definitions of translation strength.
bool check_exact(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                 SemanticsId sigma_prime);
bool check_weakly_exact(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                        SemanticsId sigma_prime);
bool check_faithful(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                    SemanticsId sigma_prime);
bool check_weakly_faithful(const AF& f, const TranslationOutput& out, SemanticsId sigma,
                           SemanticsId sigma_prime);

// Pure set-level variant used by the sweep (extension sets precomputed).
bool strength_holds(Strength st, const ExtensionSet& source_exts, const ExtensionSet& target_exts,
                    const std::vector<ArgumentId>& original_args,
                    const std::vector<Extension>& remainder);

// Structural checkers.
bool check_covering(const AF& f, const TranslationOutput& out);
bool check_embedding(const AF& f, const TranslationOutput& out);
bool check_monotone_pair(const AF& f, const AF& g, const TranslationRoute& route); // pre: f ⊆ g
bool check_modular_pair(const AF& f, const AF& g, TranslationId id);

// Fixed pairs on which tr2/tr4/tr6/tr8 demonstrably fail modularity.
struct WitnessPair {
    TranslationId id;
    AF f;
    AF g;
};
std::vector<WitnessPair> nonmodular_witnesses();

struct Failure {
    std::string apx;    // offending instance (or pair) in APX form
    std::string detail;
};

struct CheckReport {
    std::string claim;
    uint64_t instances = 0;
    uint64_t failure_count = 0;
    std::vector<Failure> failures; // first few, for diagnostics
    double elapsed_s = 0.0;
    bool pass() const { return failure_count == 0; }
};

std::string to_json_line(const CheckReport& r);

struct SweepConfig {
    int exhaustive_n = 3;                    // 0 disables the exhaustive part
    int samples_per_cell = 0;                // random AFs per (size, p) cell
    std::vector<int> sizes = {4, 5, 6};
    std::vector<double> ps = {0.15, 0.3, 0.5};
    uint64_t seed = 1;
    int modular_pairs = 500;                 // sampled pairs per modular translation
    bool structural = true;
    bool laws = true;
    bool parallel = true;
    std::vector<std::string> only;           // restrict to named reports; empty = all
};

// Runs every claim (plus structural, law and implication-ladder reports) over
// the configured instances. Deterministic for a fixed config.
std::vector<CheckReport> run_claims(const SweepConfig& cfg);

// Single-claim probe used by the CLI explore mode.
CheckReport explore_claim(SemanticsId source, SemanticsId target, const TranslationRoute& route,
                          Strength strength, const SweepConfig& cfg);

// The translate-solve-filter-project pipeline: extensions of the route's
// target framework under `target_sem`, remainder sets removed, every survivor
// restricted to the original arguments.
ExtensionSet translated_route_extensions(const AF& f, SemanticsId target_sem,
                                         const TranslationRoute& route);

} // namespace aaf
