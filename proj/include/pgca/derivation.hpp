#pragma once

#include "pgca/element.hpp"
#include "pgca/linear.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pgca {

/// ad(inner) + outer * D, the normal form of every derivation of G.
/// `inner` is always a plain-basis element.
struct Derivation {
    Element inner{Basis::Plain};
    GaussianRational outer;

    Derivation &operator+=(const Derivation &o);
    Derivation &operator-=(const Derivation &o);
    Derivation &operator*=(const GaussianRational &c);
    friend Derivation operator+(Derivation a, const Derivation &b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation &b) { return a -= b; }
    friend Derivation operator*(const GaussianRational &c, Derivation a) { return a *= c; }

    bool is_zero() const { return inner.is_zero() && outer.is_zero(); }
    friend bool operator==(const Derivation &a, const Derivation &b)
    {
        return a.inner == b.inner && a.outer == b.outer;
    }
};

inline Derivation ad(const Element &w) { return {w, {}}; }
inline Derivation outer_derivation(const GaussianRational &lambda = 1) { return {Element(Basis::Plain), lambda}; }

/// Degree window [-radius, radius] with a certified interior [-interior, interior].
class Window {
  public:
    /// Throws Error(WindowTooSmall) unless 1 <= interior and 2*interior <= radius.
    Window(std::int64_t radius, std::int64_t interior);
    /// Interior defaults to radius / 2.
    explicit Window(std::int64_t radius);

    std::int64_t radius() const noexcept { return radius_; }
    std::int64_t interior() const noexcept { return interior_; }
    bool in_window(const Element &x) const { return x.supported_within(radius_); }
    bool in_interior(const Element &x) const { return x.supported_within(interior_); }

    friend bool operator==(const Window &, const Window &) = default;

  private:
    std::int64_t radius_;
    std::int64_t interior_;
};

/// Linear map given by its images on the generators with degree in
/// [lo, hi]; generators of that range without a stored image map to zero.
struct LinearMapOnWindow {
    std::int64_t radius = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::map<Generator, Element> images;

    /// Domain covering the whole window.
    static LinearMapOnWindow on_window(std::int64_t radius, std::map<Generator, Element> images = {});

    bool in_domain(const Generator &g) const { return g.degree >= lo && g.degree <= hi; }
    /// Throws Error(OutOfWindow) when x leaves the domain.
    Element apply(const Element &x) const;
    /// Same map with the domain cut down to [-r, r].
    LinearMapOnWindow restricted(std::int64_t r) const;

    friend bool operator==(const LinearMapOnWindow &, const LinearMapOnWindow &) = default;
};

/// D: kills L and H, fixes I and J. Throws BasisMismatch on bold input.
Element outer_D(const Element &y);

/// [d.inner, y] + d.outer * D(y).
Element apply(const Derivation &d, const Element &y);

/// Exact Leibniz check; a Derivation is defined everywhere so no window applies.
bool leibniz_check(const Derivation &d, const Element &x, const Element &y);
/// Throws Error(OutOfWindow) when x, y, [x,y] are not all in the map's domain.
bool leibniz_check(const LinearMapOnWindow &map, const Element &x, const Element &y);

/// Result of solving the truncated Leibniz system at one degree.
struct DerivationSpace {
    std::int64_t degree = 0;
    /// RREF basis of all degree-homogeneous solutions on the window.
    std::vector<LinearMapOnWindow> basis;
    /// The solutions restricted to the interior, RREF.
    std::vector<LinearMapOnWindow> interior_basis;
    /// span{ad L_d, ad H_d, ad I_d, ad J_d} (+ D at degree 0) restricted to the interior, RREF.
    std::vector<LinearMapOnWindow> expected_basis;
    /// interior_basis == expected_basis.
    bool matches_expected = false;
    /// The full solution space contains D itself.
    bool contains_outer = false;
};

/// Degree-`degree` linear maps satisfying Leibniz on every generator pair
/// resolvable inside the window. Requires |degree| <= radius - interior,
/// otherwise throws Error(WindowTooSmall).
DerivationSpace derivation_space(const Window &w, std::int64_t degree);

/// Affine family of derivations (inner supported in [-radius, radius]).
struct DerivationAffineSpace {
    Derivation particular;
    std::vector<Derivation> homogeneous;
};

/// Derivations d with inner supported in [-radius, radius] and
/// apply(d, point) = value for every condition; nullopt if none exists.
/// Particular solution has all free coordinates zero; the homogeneous basis
/// is RREF in coordinate order (inner generators in generator order, then D).
std::optional<DerivationAffineSpace>
solve_derivations(const std::vector<std::pair<Element, Element>> &conditions, std::int64_t radius);

/// Basis of {d : apply(d, x) = 0} with window-supported inner.
/// x must lie in the interior (Error(WindowTooSmall) otherwise); x = 0 gives
/// the whole window.
std::vector<Derivation> annihilator(const Element &x, const Window &w);

/// Common annihilator of several points; points need only lie in the window.
std::vector<Derivation> joint_annihilator(const std::vector<Element> &points, const Window &w);

/// Basis of {x in the interior : [x, g] = 0 for every window generator g}.
std::vector<Element> center_check(const Window &w);

/// Canonical (RREF) basis of a span of derivations, in solver coordinates.
std::vector<Derivation> derivation_span_basis(const std::vector<Derivation> &ds);

} // namespace pgca
