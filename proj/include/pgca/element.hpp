#pragma once

#include "pgca/scalar.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>

namespace pgca {

enum class Family : std::uint8_t { L = 0, H = 1, I = 2, J = 3 };
enum class Basis : std::uint8_t { Plain = 0, Bold = 1 };

inline constexpr Family kFamilies[] = {Family::L, Family::H, Family::I, Family::J};

char family_letter(Family f);

/// One basis symbol. Ordered by basis, then family (L<H<I<J), then degree.
struct Generator {
    Basis basis = Basis::Plain;
    Family family = Family::L;
    std::int64_t degree = 0;

    friend auto operator<=>(const Generator &, const Generator &) = default;
};

inline Generator L(std::int64_t m, Basis b = Basis::Plain) { return {b, Family::L, m}; }
inline Generator H(std::int64_t m, Basis b = Basis::Plain) { return {b, Family::H, m}; }
inline Generator I(std::int64_t m, Basis b = Basis::Plain) { return {b, Family::I, m}; }
inline Generator J(std::int64_t m, Basis b = Basis::Plain) { return {b, Family::J, m}; }

/// Finitely supported Q(i)-combination of generators of one basis.
///
/// Zero coefficients are never stored. The zero element carries a basis tag
/// but is compatible with either basis in every operation.
class Element {
  public:
    using Terms = std::map<Generator, GaussianRational>;

    Element() = default;
    explicit Element(Basis basis) : basis_(basis) {}
    Element(const Generator &g) : basis_(g.basis) { terms_.emplace(g, GaussianRational(1)); } // NOLINT
    Element(const GaussianRational &c, const Generator &g);

    /// Builds from (coefficient, generator) pairs; like terms are combined.
    /// Throws Error(BasisMismatch) if the generators disagree on basis.
    static Element from_terms(std::initializer_list<std::pair<GaussianRational, Generator>> terms);

    Basis basis() const noexcept { return basis_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of g (zero when absent).
    GaussianRational coeff(const Generator &g) const;

    /// Adds c*g; checks basis compatibility.
    void add_term(const GaussianRational &c, const Generator &g);

    /// Largest |degree| in the support, 0 for the zero element.
    std::int64_t max_abs_degree() const;
    /// True when every generator has |degree| <= radius.
    bool supported_within(std::int64_t radius) const;

    /// Same terms retagged to another basis (zero element only changes its tag).
    Element with_basis_tag(Basis b) const;

    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);
    Element &operator*=(const GaussianRational &c);

    Element operator-() const;
    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator*(const GaussianRational &c, Element a) { return a *= c; }
    friend Element operator*(Element a, const GaussianRational &c) { return a *= c; }

    /// Coefficient-wise equality; any two zero elements are equal.
    friend bool operator==(const Element &a, const Element &b);

  private:
    void check_basis(Basis other);

    Basis basis_ = Basis::Plain;
    Terms terms_;
};

inline Element operator+(const Generator &a, const Generator &b) { return Element(a) + Element(b); }
inline Element operator-(const Generator &a, const Generator &b) { return Element(a) - Element(b); }
inline Element operator*(const GaussianRational &c, const Generator &g) { return Element(c, g); }

std::ostream &operator<<(std::ostream &os, const Element &x);

} // namespace pgca
