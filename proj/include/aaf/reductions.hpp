#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aaf/af.hpp"

namespace aaf {

// Definite Horn theory: every rule has exactly one head atom; bodies may be
// empty.
struct HornRule {
    std::vector<std::string> body;
    std::string head;
};

struct HornTheory {
    std::vector<std::string> atoms;
    std::vector<HornRule> rules;
};

// Least model via unit propagation.
std::vector<std::string> horn_minimal_model(const HornTheory& t);

// Framework over rule arguments r__<i>, the atoms, and __t: atoms self-attack
// and are attacked by __t, the query attacks __t, rules attack their heads and
// are attacked by their body atoms. The query atom is in the minimal model of
// the theory exactly when __t ends up in the grounded extension.
AF horn_to_af(const HornTheory& t, const std::string& query);

// Text form: one rule per line, `b1 & b2 -> h`, empty body written `-> h`.
// `#` starts a comment line.
HornTheory parse_horn(const std::string& text);

// 3-CNF with DIMACS-style literals (+v / -v, 1-based); clauses of size <= 3.
struct Cnf3 {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

bool brute_sat(const Cnf3& phi);
std::optional<std::vector<bool>> brute_sat_model(const Cnf3& phi);

// Framework over literal arguments x<i> / barred x<i>, clause arguments
// c__<j>, and __s/__t/__b. The formula is satisfiable exactly when {__s} is
// not a stage extension.
AF cnf_to_af(const Cnf3& phi);

Cnf3 parse_dimacs(const std::string& text);

} // namespace aaf
