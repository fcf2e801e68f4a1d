#pragma once

#include <stdexcept>
#include <string>

namespace aaf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyArguments : Error {
    EmptyArguments() : Error("an argumentation framework needs at least one argument") {}
};

struct DanglingAttack : Error {
    explicit DanglingAttack(const std::string& endpoint)
        : Error("attack endpoint '" + endpoint + "' is not an argument of the framework") {}
};

struct NotInFramework : Error {
    explicit NotInFramework(const std::string& what_arg)
        : Error("'" + what_arg + "' does not belong to the framework") {}
};

struct ReservedName : Error {
    explicit ReservedName(const std::string& name)
        : Error("name '" + name + "' uses the reserved fresh-argument encoding") {}
};

struct SyntaxError : Error {
    int line;
    SyntaxError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& msg) : Error(msg) {}
};

struct UnknownAtom : Error {
    explicit UnknownAtom(const std::string& atom) : Error("unknown atom '" + atom + "'") {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

} // namespace aaf
