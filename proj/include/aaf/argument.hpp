#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace aaf {

// Decorations distinguish the fresh arguments introduced by translations and
// reductions from the plain arguments of input frameworks. Plain names never
// contain a double underscore, so the textual encodings below are injective.
enum class Tag : uint8_t {
    plain,
    prime,           // <base>__p
    bar,             // <base>__n
    circ,            // <base>__o
    bar_circ,        // <base>__no
    layer,           // <base>__L<i>
    bar_circ_layer,  // <base>__no__L<i>
    attack_pair,     // r__<src>__<dst>
    rule_index,      // r__<i>
    clause_index,    // c__<i>
    special_t,       // __t
    special_s,       // __s
    special_b,       // __b
};

class ArgumentId {
public:
    ArgumentId() = default;

    // Plain identifier over [A-Za-z0-9_]. Throws BadParameter on an empty or
    // malformed token and ReservedName if the token contains "__".
    static ArgumentId plain(const std::string& name);

    static ArgumentId primed(const ArgumentId& of);
    static ArgumentId barred(const ArgumentId& of);
    static ArgumentId circled(const ArgumentId& of);
    static ArgumentId bar_circled(const ArgumentId& of);
    static ArgumentId layered(const ArgumentId& of, int layer);
    static ArgumentId bar_circ_layered(const ArgumentId& of, int layer);
    static ArgumentId attack_argument(const ArgumentId& src, const ArgumentId& dst);
    static ArgumentId rule_argument(int index);
    static ArgumentId clause_argument(int index);
    static ArgumentId special_t();
    static ArgumentId special_s();
    static ArgumentId special_b();

    const std::string& text() const { return text_; }
    Tag tag() const { return tag_; }
    bool is_plain() const { return tag_ == Tag::plain; }

    // Provenance of decorated identifiers.
    const std::string& base() const { return base_; }
    const std::string& second() const { return second_; }
    int index() const { return index_; }

    bool operator==(const ArgumentId& o) const { return text_ == o.text_; }
    std::strong_ordering operator<=>(const ArgumentId& o) const { return text_ <=> o.text_; }

private:
    std::string text_;    // canonical encoded form, unique per identifier
    std::string base_;    // decorated source (or attack source for attack_pair)
    std::string second_;  // attack target for attack_pair
    Tag tag_ = Tag::plain;
    int index_ = 0;       // layer / rule / clause index
};

// True for any token in the reserved fresh-argument encoding.
bool is_reserved_name(const std::string& token);

} // namespace aaf
