#pragma once

#include "pgca/derivation.hpp"
#include "pgca/element.hpp"
#include "pgca/report.hpp"
#include "pgca/scalar.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace pgca {

class TwoLocalInstance;

using Json = nlohmann::ordered_json;

// Element grammar (whitespace between tokens is ignored):
//
//   element  := ['-'] term (('+' | '-') term)*
//   term     := [scalar '*'] gen | scalar          (a bare scalar must be 0)
//   gen      := ('L' | 'H' | 'I' | 'J') ['b'] '[' integer ']'
//   scalar   := rational | '(' rational [('+' | '-') rational] 'i' ')' | 'i'
//   rational := ['-'] digits ['/' digits]
//
// A 'b' suffix selects the bold basis; one element never mixes suffixes.

/// Throws ParseError (byte offset + expected tokens) or a positioned BasisMixError.
Element parse_element(std::string_view text);
GaussianRational parse_scalar(std::string_view text);

/// Canonical text: terms in generator order, "0" for zero, e.g. "2*L[3] - J[0]".
std::string print_element(const Element &x);
std::string print_scalar(const GaussianRational &c);
/// "ad(<inner>) + <lambda>*D", omitting vanishing parts; "0" for zero.
std::string print_derivation(const Derivation &d);

/// Instance document:
///   {"window": N, "interior": M, "table": [{"point": "...", "value": "..."}, ...]}
/// "interior" is optional (defaults to N / 2). Integers may also be given
/// as decimal strings. Throws SchemaError with a JSON pointer.
TwoLocalInstance load_instance(const Json &doc);
TwoLocalInstance load_instance_text(std::string_view text);
Json save_instance(const TwoLocalInstance &inst);

Json save_report(const Report &report);
Report load_report(const Json &doc);

} // namespace pgca
