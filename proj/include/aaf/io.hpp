#pragma once

#include <string>

#include "aaf/af.hpp"

namespace aaf {

// APX: `arg(<name>).` and `att(<a>,<b>).` statements, one per line, `#` for
// comment lines. TGF: argument names, a lone `#`, then `<a> <b>` attack lines.
// Parsed frameworks carry plain identifiers only; names in the reserved
// fresh-argument encoding are rejected.
AF parse_apx(const std::string& text);
std::string serialize_apx(const AF& f);

AF parse_tgf(const std::string& text);
std::string serialize_tgf(const AF& f);

std::string to_dot(const AF& f);

} // namespace aaf
