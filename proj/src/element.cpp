#include "pgca/element.hpp"

#include "pgca/error.hpp"
#include "pgca/exprio.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace pgca {

char family_letter(Family f)
{
    switch (f) {
    case Family::L:
        return 'L';
    case Family::H:
        return 'H';
    case Family::I:
        return 'I';
    case Family::J:
        return 'J';
    }
    return '?';
}

Element::Element(const GaussianRational &c, const Generator &g) : basis_(g.basis)
{
    if (!c.is_zero())
        terms_.emplace(g, c);
}

Element Element::from_terms(std::initializer_list<std::pair<GaussianRational, Generator>> terms)
{
    Element out;
    bool first = true;
    for (const auto &[c, g] : terms) {
        if (first) {
            out.basis_ = g.basis;
            first = false;
        }
        out.add_term(c, g);
    }
    return out;
}

GaussianRational Element::coeff(const Generator &g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Element::check_basis(Basis other)
{
    if (other == basis_)
        return;
    if (!terms_.empty())
        throw Error(ErrorCode::BasisMismatch, "cannot combine plain-basis and bold-basis elements");
    basis_ = other;
}

void Element::add_term(const GaussianRational &c, const Generator &g)
{
    if (c.is_zero())
        return;
    check_basis(g.basis);
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::int64_t Element::max_abs_degree() const
{
    std::int64_t r = 0;
    for (const auto &[g, c] : terms_)
        r = std::max<std::int64_t>(r, std::llabs(g.degree));
    return r;
}

bool Element::supported_within(std::int64_t radius) const { return max_abs_degree() <= radius; }

Element Element::with_basis_tag(Basis b) const
{
    Element out(b);
    for (const auto &[g, c] : terms_) {
        Generator h = g;
        h.basis = b;
        out.terms_.emplace(h, c);
    }
    return out;
}

Element &Element::operator+=(const Element &o)
{
    if (o.is_zero())
        return *this;
    check_basis(o.basis_);
    for (const auto &[g, c] : o.terms_)
        add_term(c, g);
    return *this;
}

Element &Element::operator-=(const Element &o)
{
    if (o.is_zero())
        return *this;
    check_basis(o.basis_);
    for (const auto &[g, c] : o.terms_)
        add_term(-c, g);
    return *this;
}

Element &Element::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[g, v] : terms_)
        v *= c;
    return *this;
}

Element Element::operator-() const
{
    Element out = *this;
    for (auto &[g, v] : out.terms_)
        v = -v;
    return out;
}

bool operator==(const Element &a, const Element &b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
}

std::ostream &operator<<(std::ostream &os, const Element &x) { return os << print_element(x); }

} // namespace pgca
