#pragma once

#include "cliffrep/idempotent.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace cliffrep::cli {

// expr  := ['+'|'-'] term (('+'|'-') term)*
// term  := rational ['*'] blade | rational | blade
// blade := '1' | 'e' digit+ (strictly ascending) | 'e{' int (',' int)* '}'
// Whitespace between tokens is ignored. Errors carry a 0-based offset.
Multivector parse_expression(std::string_view text, const Signature& sig);

Blade parse_blade(std::string_view text, const Signature& sig);

// "+e13,+e24", "e15 e26", "-e1, +e23"; separators are commas or spaces.
struct FactorList {
  std::vector<Blade> blades;
  std::vector<int> signs;
};
FactorList parse_factor_list(std::string_view text, const Signature& sig);

// "2,2" -> Signature(2,2)
Signature parse_signature(std::string_view text);

}  // namespace cliffrep::cli
