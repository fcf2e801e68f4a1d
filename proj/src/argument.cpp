#include "aaf/argument.hpp"

#include "aaf/errors.hpp"

namespace aaf {

namespace {

bool valid_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

} // namespace

bool is_reserved_name(const std::string& token) {
    return token.find("__") != std::string::npos;
}

ArgumentId ArgumentId::plain(const std::string& name) {
    if (name.empty())
        throw BadParameter("argument name must be non-empty");
    for (char c : name)
        if (!valid_token_char(c))
            throw BadParameter("argument name '" + name + "' contains invalid character");
    if (is_reserved_name(name))
        throw ReservedName(name);
    ArgumentId id;
    id.text_ = name;
    id.base_ = name;
    id.tag_ = Tag::plain;
    return id;
}

ArgumentId ArgumentId::primed(const ArgumentId& of) {
    ArgumentId id;
    id.tag_ = Tag::prime;
    id.base_ = of.text();
    id.text_ = of.text() + "__p";
    return id;
}

ArgumentId ArgumentId::barred(const ArgumentId& of) {
    ArgumentId id;
    id.tag_ = Tag::bar;
    id.base_ = of.text();
    id.text_ = of.text() + "__n";
    return id;
}

ArgumentId ArgumentId::circled(const ArgumentId& of) {
    ArgumentId id;
    id.tag_ = Tag::circ;
    id.base_ = of.text();
    id.text_ = of.text() + "__o";
    return id;
}

ArgumentId ArgumentId::bar_circled(const ArgumentId& of) {
    ArgumentId id;
    id.tag_ = Tag::bar_circ;
    id.base_ = of.text();
    id.text_ = of.text() + "__no";
    return id;
}

ArgumentId ArgumentId::layered(const ArgumentId& of, int layer) {
    if (layer < 1)
        throw BadParameter("layer index must be positive");
    ArgumentId id;
    id.tag_ = Tag::layer;
    id.base_ = of.text();
    id.index_ = layer;
    id.text_ = of.text() + "__L" + std::to_string(layer);
    return id;
}

ArgumentId ArgumentId::bar_circ_layered(const ArgumentId& of, int layer) {
    if (layer < 1)
        throw BadParameter("layer index must be positive");
    ArgumentId id;
    id.tag_ = Tag::bar_circ_layer;
    id.base_ = of.text();
    id.index_ = layer;
    id.text_ = of.text() + "__no__L" + std::to_string(layer);
    return id;
}

ArgumentId ArgumentId::attack_argument(const ArgumentId& src, const ArgumentId& dst) {
    ArgumentId id;
    id.tag_ = Tag::attack_pair;
    id.base_ = src.text();
    id.second_ = dst.text();
    id.text_ = "r__" + src.text() + "__" + dst.text();
    return id;
}

ArgumentId ArgumentId::rule_argument(int index) {
    if (index < 1)
        throw BadParameter("rule index must be positive");
    ArgumentId id;
    id.tag_ = Tag::rule_index;
    id.index_ = index;
    id.text_ = "r__" + std::to_string(index);
    return id;
}

ArgumentId ArgumentId::clause_argument(int index) {
    if (index < 1)
        throw BadParameter("clause index must be positive");
    ArgumentId id;
    id.tag_ = Tag::clause_index;
    id.index_ = index;
    id.text_ = "c__" + std::to_string(index);
    return id;
}

ArgumentId ArgumentId::special_t() {
    ArgumentId id;
    id.tag_ = Tag::special_t;
    id.text_ = "__t";
    return id;
}

ArgumentId ArgumentId::special_s() {
    ArgumentId id;
    id.tag_ = Tag::special_s;
    id.text_ = "__s";
    return id;
}

ArgumentId ArgumentId::special_b() {
    ArgumentId id;
    id.tag_ = Tag::special_b;
    id.text_ = "__b";
    return id;
}

} // namespace aaf
