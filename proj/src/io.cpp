#include "aaf/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "aaf/errors.hpp"

namespace aaf {

namespace {

std::string strip_ws(const std::string& line) {
    std::string out;
    out.reserve(line.size());
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

bool valid_token(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

ArgumentId parse_name(const std::string& token, int line_no) {
    if (!valid_token(token))
        throw SyntaxError(line_no, "invalid argument name '" + token + "'");
    if (is_reserved_name(token))
        throw ReservedName(token);
    return ArgumentId::plain(token);
}

} // namespace

AF parse_apx(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    std::vector<ArgumentId> args;
    // attacks remembered with their line for the declaration check
    std::vector<std::pair<Attack, int>> attacks;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_ws(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("arg(", 0) == 0 && line.size() > 6 && line.substr(line.size() - 2) == ").") {
            std::string name = line.substr(4, line.size() - 6);
            args.push_back(parse_name(name, line_no));
        } else if (line.rfind("att(", 0) == 0 && line.size() > 6 &&
                   line.substr(line.size() - 2) == ").") {
            std::string body = line.substr(4, line.size() - 6);
            auto comma = body.find(',');
            if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
                throw SyntaxError(line_no, "attack needs exactly two arguments");
            ArgumentId from = parse_name(body.substr(0, comma), line_no);
            ArgumentId to = parse_name(body.substr(comma + 1), line_no);
            attacks.push_back({{from, to}, line_no});
        } else {
            throw SyntaxError(line_no, "expected arg(...). or att(...). statement");
        }
    }

    ArgSet declared{args};
    std::vector<Attack> plain_attacks;
    plain_attacks.reserve(attacks.size());
    for (const auto& [att, at_line] : attacks) {
        if (!declared.contains(att.first))
            throw SyntaxError(at_line, "undeclared argument '" + att.first.text() + "'");
        if (!declared.contains(att.second))
            throw SyntaxError(at_line, "undeclared argument '" + att.second.text() + "'");
        plain_attacks.push_back(att);
    }
    if (args.empty())
        throw EmptyArguments();
    return AF(std::move(args), std::move(plain_attacks));
}

std::string serialize_apx(const AF& f) {
    std::ostringstream out;
    for (const auto& a : f.args())
        out << "arg(" << a.text() << ").\n";
    for (const auto& [from, to] : f.attacks())
        out << "att(" << from.text() << "," << to.text() << ").\n";
    return out.str();
}

AF parse_tgf(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool in_attacks = false;

    std::vector<ArgumentId> args;
    std::vector<std::pair<Attack, int>> attacks;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        // trim
        auto b = line.find_first_not_of(" \t\r");
        auto e = line.find_last_not_of(" \t\r");
        line = (b == std::string::npos) ? "" : line.substr(b, e - b + 1);
        if (line.empty())
            continue;
        if (line == "#") {
            if (in_attacks)
                throw SyntaxError(line_no, "duplicate '#' separator");
            in_attacks = true;
            continue;
        }
        if (!in_attacks) {
            args.push_back(parse_name(line, line_no));
        } else {
            std::istringstream ls(line);
            std::string a, bname, extra;
            if (!(ls >> a >> bname) || (ls >> extra))
                throw SyntaxError(line_no, "attack line needs exactly two names");
            attacks.push_back({{parse_name(a, line_no), parse_name(bname, line_no)}, line_no});
        }
    }

    ArgSet declared{args};
    std::vector<Attack> plain_attacks;
    for (const auto& [att, at_line] : attacks) {
        if (!declared.contains(att.first))
            throw SyntaxError(at_line, "undeclared argument '" + att.first.text() + "'");
        if (!declared.contains(att.second))
            throw SyntaxError(at_line, "undeclared argument '" + att.second.text() + "'");
        plain_attacks.push_back(att);
    }
    if (args.empty())
        throw EmptyArguments();
    return AF(std::move(args), std::move(plain_attacks));
}

std::string serialize_tgf(const AF& f) {
    std::ostringstream out;
    for (const auto& a : f.args())
        out << a.text() << "\n";
    out << "#\n";
    for (const auto& [from, to] : f.attacks())
        out << from.text() << " " << to.text() << "\n";
    return out.str();
}

std::string to_dot(const AF& f) {
    std::ostringstream out;
    out << "digraph af {\n";
    for (const auto& a : f.args())
        out << "  \"" << a.text() << "\";\n";
    for (const auto& [from, to] : f.attacks())
        out << "  \"" << from.text() << "\" -> \"" << to.text() << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace aaf
