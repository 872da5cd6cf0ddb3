#pragma once

#include "pgca/element.hpp"

#include <cstdint>
#include <optional>

namespace pgca {

/// A single structure constant: [a, b] = coeff * target.
struct BracketTerm {
    std::int64_t coeff;
    Generator target;
};

/// Bracket of two generators from the same basis table; nullopt when the
/// pair brackets to zero. Throws Error(BasisMismatch) on mixed bases.
std::optional<BracketTerm> bracket(const Generator &a, const Generator &b);

/// Bilinear extension of the generator table. Zero brackets to zero with
/// either basis; two nonzero elements of different bases throw BasisMismatch.
Element bracket(const Element &x, const Element &y);

/// Plain -> bold substitution: L->L, H->iH, I->I+iJ, J->I-iJ.
Element to_bold(const Element &x);

/// Bold -> plain, the inverse of to_bold.
Element to_plain(const Element &x);

} // namespace pgca
