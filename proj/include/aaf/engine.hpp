#pragma once

#include <vector>

#include "aaf/bits.hpp"
#include "aaf/digraph.hpp"

namespace aaf {
namespace engine {

// Search-based enumeration for frameworks beyond the reach of the subset-scan
// reference. Each returns the full family of extensions as index masks.

// In/out backtracking with unit propagation.
std::vector<Bits> stable(const Digraph& g);

// Tri-valued (in/out/undecided) labelling search; one labelling per complete
// extension.
std::vector<Bits> complete(const Digraph& g);

// In/not-in backtracking with defence obligations.
std::vector<Bits> admissible(const Digraph& g);

// Maximal conflict-free sets (Bron-Kerbosch over the non-conflict graph)
// filtered to range-maximal ones.
std::vector<Bits> stage(const Digraph& g);

// Least fixpoint of the characteristic function.
Bits grounded(const Digraph& g);

std::vector<Bits> preferred(const Digraph& g);   // subset-maximal complete
std::vector<Bits> semi_stable(const Digraph& g); // range-maximal complete

} // namespace engine
} // namespace aaf
