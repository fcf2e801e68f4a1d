#include "aaf/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "aaf/errors.hpp"

namespace aaf {

namespace {

void validate_theory(const HornTheory& t) {
    std::set<std::string> atoms(t.atoms.begin(), t.atoms.end());
    for (const auto& r : t.rules) {
        if (atoms.find(r.head) == atoms.end())
            throw UnknownAtom(r.head);
        for (const auto& b : r.body)
            if (atoms.find(b) == atoms.end())
                throw UnknownAtom(b);
    }
}

} // namespace

std::vector<std::string> horn_minimal_model(const HornTheory& t) {
    validate_theory(t);
    // pebble the rules: fire every rule whose body is already true
    std::map<std::string, std::vector<size_t>> waiting; // atom -> rules it blocks
    std::vector<size_t> missing(t.rules.size());
    std::set<std::string> model;
    std::vector<std::string> queue;

    for (size_t i = 0; i < t.rules.size(); ++i) {
        std::set<std::string> body(t.rules[i].body.begin(), t.rules[i].body.end());
        missing[i] = body.size();
        for (const auto& b : body)
            waiting[b].push_back(i);
        if (missing[i] == 0 && model.insert(t.rules[i].head).second)
            queue.push_back(t.rules[i].head);
    }
    while (!queue.empty()) {
        std::string atom = queue.back();
        queue.pop_back();
        auto it = waiting.find(atom);
        if (it == waiting.end())
            continue;
        for (size_t rule : it->second)
            if (--missing[rule] == 0 && model.insert(t.rules[rule].head).second)
                queue.push_back(t.rules[rule].head);
    }
    return {model.begin(), model.end()};
}

AF horn_to_af(const HornTheory& t, const std::string& query) {
    validate_theory(t);
    if (std::find(t.atoms.begin(), t.atoms.end(), query) == t.atoms.end())
        throw UnknownAtom(query);

    ArgumentId tt = ArgumentId::special_t();
    std::vector<ArgumentId> args;
    std::vector<Attack> attacks;
    std::map<std::string, ArgumentId> atom_ids;
    for (const auto& x : t.atoms)
        atom_ids.emplace(x, ArgumentId::plain(x));

    args.push_back(tt);
    for (const auto& [name, id] : atom_ids) {
        args.push_back(id);
        attacks.push_back({id, id});
        attacks.push_back({tt, id});
    }
    attacks.push_back({atom_ids.at(query), tt});
    for (size_t i = 0; i < t.rules.size(); ++i) {
        ArgumentId r = ArgumentId::rule_argument(static_cast<int>(i) + 1);
        args.push_back(r);
        attacks.push_back({r, atom_ids.at(t.rules[i].head)});
        for (const auto& b : t.rules[i].body)
            attacks.push_back({atom_ids.at(b), r});
    }
    return AF(std::move(args), std::move(attacks));
}

HornTheory parse_horn(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    HornTheory t;
    std::set<std::string> atoms;

    auto token = [&](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        if (b == std::string::npos)
            throw SyntaxError(line_no, "empty atom");
        s = s.substr(b, e - b + 1);
        ArgumentId::plain(s); // validates charset and reserved encoding
        atoms.insert(s);
        return s;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos || raw[b] == '#')
            continue;
        auto arrow = raw.find("->");
        if (arrow == std::string::npos)
            throw SyntaxError(line_no, "rule needs '->'");
        HornRule rule;
        std::string lhs = raw.substr(0, arrow);
        std::string rhs = raw.substr(arrow + 2);
        rule.head = token(rhs);
        if (lhs.find_first_not_of(" \t\r") != std::string::npos) {
            std::istringstream body(lhs);
            std::string part;
            while (std::getline(body, part, '&'))
                rule.body.push_back(token(part));
        }
        t.rules.push_back(std::move(rule));
    }
    t.atoms.assign(atoms.begin(), atoms.end());
    return t;
}

namespace {

void validate_cnf(const Cnf3& phi) {
    if (phi.num_vars < 0)
        throw BadParameter("negative variable count");
    for (const auto& clause : phi.clauses) {
        if (clause.size() > 3)
            throw BadParameter("clause with more than three literals");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > phi.num_vars)
                throw BadParameter("literal out of range");
    }
}

} // namespace

std::optional<std::vector<bool>> brute_sat_model(const Cnf3& phi) {
    validate_cnf(phi);
    if (phi.num_vars > 20)
        throw TooLarge("brute-force satisfiability is limited to 20 variables");
    uint64_t total = uint64_t(1) << phi.num_vars;
    for (uint64_t m = 0; m < total; ++m) {
        bool ok = true;
        for (const auto& clause : phi.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool v = (m >> (std::abs(lit) - 1)) & 1u;
                if (lit > 0 ? v : !v) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> model(phi.num_vars);
            for (int v = 0; v < phi.num_vars; ++v)
                model[v] = (m >> v) & 1u;
            return model;
        }
    }
    return std::nullopt;
}

bool brute_sat(const Cnf3& phi) { return brute_sat_model(phi).has_value(); }

AF cnf_to_af(const Cnf3& phi) {
    validate_cnf(phi);
    ArgumentId s = ArgumentId::special_s();
    ArgumentId t = ArgumentId::special_t();
    ArgumentId b = ArgumentId::special_b();

    std::vector<ArgumentId> pos, neg;
    for (int v = 1; v <= phi.num_vars; ++v) {
        pos.push_back(ArgumentId::plain("x" + std::to_string(v)));
        neg.push_back(ArgumentId::barred(pos.back()));
    }
    std::vector<ArgumentId> clause_args;
    for (size_t j = 0; j < phi.clauses.size(); ++j)
        clause_args.push_back(ArgumentId::clause_argument(static_cast<int>(j) + 1));

    std::vector<ArgumentId> args = {s, t, b};
    args.insert(args.end(), pos.begin(), pos.end());
    args.insert(args.end(), neg.begin(), neg.end());
    args.insert(args.end(), clause_args.begin(), clause_args.end());

    std::vector<Attack> attacks;
    for (int v = 0; v < phi.num_vars; ++v) {
        attacks.push_back({pos[v], neg[v]});
        attacks.push_back({neg[v], pos[v]});
    }
    for (size_t j = 0; j < phi.clauses.size(); ++j) {
        for (int lit : phi.clauses[j])
            attacks.push_back({lit > 0 ? pos[lit - 1] : neg[-lit - 1], clause_args[j]});
        attacks.push_back({clause_args[j], t});
    }
    for (const auto& y : args) {
        if (y == s || y == b)
            continue;
        attacks.push_back({s, y});
        attacks.push_back({y, s});
    }
    attacks.push_back({t, b});
    attacks.push_back({b, b});
    return AF(std::move(args), std::move(attacks));
}

Cnf3 parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    Cnf3 phi;
    bool header = false;
    int expected_clauses = -1;
    std::vector<int> current;

    while (std::getline(in, raw)) {
        ++line_no;
        auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos || raw[b] == 'c')
            continue;
        std::istringstream ls(raw);
        if (raw[b] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> phi.num_vars >> expected_clauses) || fmt != "cnf")
                throw SyntaxError(line_no, "malformed DIMACS header");
            header = true;
            continue;
        }
        if (!header)
            throw SyntaxError(line_no, "clause before 'p cnf' header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() > 3)
                    throw SyntaxError(line_no, "clause with more than three literals");
                phi.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > phi.num_vars)
                    throw SyntaxError(line_no, "literal out of range");
                current.push_back(lit);
            }
        }
        if (ls.fail() && !ls.eof())
            throw SyntaxError(line_no, "malformed clause line");
    }
    if (!current.empty())
        throw SyntaxError(line_no, "clause not terminated by 0");
    if (!header)
        throw SyntaxError(1, "missing 'p cnf' header");
    if (expected_clauses >= 0 && static_cast<int>(phi.clauses.size()) != expected_clauses)
        throw SyntaxError(line_no, "clause count does not match header");
    return phi;
}

} // namespace aaf
