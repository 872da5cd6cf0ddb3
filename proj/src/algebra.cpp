#include "pgca/algebra.hpp"

#include "pgca/error.hpp"

namespace pgca {

namespace {

// [a_n, b_m] with a's family not after b's (L<H<I<J); pairs not listed vanish.
std::optional<BracketTerm> ordered_bracket(Family a, std::int64_t n, Family b, std::int64_t m, Basis basis)
{
    const std::int64_t s = m + n;
    switch (a) {
    case Family::L:
        if (b == Family::H)
            return BracketTerm{m, {basis, Family::H, s}};
        return BracketTerm{m - n, {basis, b, s}};
    case Family::H:
        if (b == Family::I)
            return BracketTerm{1, {basis, basis == Basis::Plain ? Family::I : Family::J, s}};
        if (b == Family::J)
            return BracketTerm{-1, {basis, basis == Basis::Plain ? Family::J : Family::I, s}};
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

} // namespace

std::optional<BracketTerm> bracket(const Generator &a, const Generator &b)
{
    if (a.basis != b.basis)
        throw Error(ErrorCode::BasisMismatch, "bracket of generators from different bases");
    std::optional<BracketTerm> t;
    if (a.family <= b.family) {
        t = ordered_bracket(a.family, a.degree, b.family, b.degree, a.basis);
    } else {
        t = ordered_bracket(b.family, b.degree, a.family, a.degree, a.basis);
        if (t)
            t->coeff = -t->coeff;
    }
    if (t && t->coeff == 0)
        return std::nullopt;
    return t;
}

Element bracket(const Element &x, const Element &y)
{
    if (x.is_zero() || y.is_zero())
        return Element(x.is_zero() ? y.basis() : x.basis());
    if (x.basis() != y.basis())
        throw Error(ErrorCode::BasisMismatch, "bracket of elements from different bases");
    Element out(x.basis());
    for (const auto &[a, ca] : x.terms()) {
        for (const auto &[b, cb] : y.terms()) {
            auto t = bracket(a, b);
            if (t)
                out.add_term(ca * cb * GaussianRational(t->coeff), t->target);
        }
    }
    return out;
}

Element to_bold(const Element &x)
{
    if (x.is_zero())
        return Element(Basis::Bold);
    if (x.basis() != Basis::Plain)
        throw Error(ErrorCode::BasisMismatch, "to_bold expects a plain-basis element");
    const GaussianRational i = GaussianRational::imaginary_unit();
    Element out(Basis::Bold);
    for (const auto &[g, c] : x.terms()) {
        const std::int64_t m = g.degree;
        switch (g.family) {
        case Family::L:
            out.add_term(c, L(m, Basis::Bold));
            break;
        case Family::H:
            out.add_term(c * i, H(m, Basis::Bold));
            break;
        case Family::I:
            out.add_term(c, I(m, Basis::Bold));
            out.add_term(c * i, J(m, Basis::Bold));
            break;
        case Family::J:
            out.add_term(c, I(m, Basis::Bold));
            out.add_term(-(c * i), J(m, Basis::Bold));
            break;
        }
    }
    return out;
}

Element to_plain(const Element &x)
{
    if (x.is_zero())
        return Element(Basis::Plain);
    if (x.basis() != Basis::Bold)
        throw Error(ErrorCode::BasisMismatch, "to_plain expects a bold-basis element");
    const GaussianRational half(Rational(1, 2));
    const GaussianRational half_i(0, Rational(1, 2));
    const GaussianRational i = GaussianRational::imaginary_unit();
    Element out(Basis::Plain);
    for (const auto &[g, c] : x.terms()) {
        const std::int64_t m = g.degree;
        switch (g.family) {
        case Family::L:
            out.add_term(c, L(m));
            break;
        case Family::H: // Hb = -i H
            out.add_term(-(c * i), H(m));
            break;
        case Family::I: // Ib = (I + J)/2
            out.add_term(c * half, I(m));
            out.add_term(c * half, J(m));
            break;
        case Family::J: // Jb = (I - J)/(2i) = -i/2 I + i/2 J
            out.add_term(-(c * half_i), I(m));
            out.add_term(c * half_i, J(m));
            break;
        }
    }
    return out;
}

} // namespace pgca
