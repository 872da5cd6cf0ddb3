#include "pgca/derivation.hpp"

#include "pgca/algebra.hpp"
#include "pgca/error.hpp"

#include <cstdlib>
#include <set>
#include <string>

namespace pgca {

Derivation &Derivation::operator+=(const Derivation &o)
{
    inner += o.inner;
    outer += o.outer;
    return *this;
}

Derivation &Derivation::operator-=(const Derivation &o)
{
    inner -= o.inner;
    outer -= o.outer;
    return *this;
}

Derivation &Derivation::operator*=(const GaussianRational &c)
{
    inner *= c;
    outer *= c;
    return *this;
}

Window::Window(std::int64_t radius, std::int64_t interior) : radius_(radius), interior_(interior)
{
    if (radius < 1 || interior < 1 || 2 * interior > radius)
        throw Error(ErrorCode::WindowTooSmall, "invalid window: need 1 <= interior <= radius/2 (radius " +
                                                   std::to_string(radius) + ", interior " +
                                                   std::to_string(interior) + ")");
}

Window::Window(std::int64_t radius) : Window(radius, radius / 2) {}

LinearMapOnWindow LinearMapOnWindow::on_window(std::int64_t radius, std::map<Generator, Element> images)
{
    LinearMapOnWindow m;
    m.radius = radius;
    m.lo = -radius;
    m.hi = radius;
    m.images = std::move(images);
    for (const auto &[g, img] : m.images)
        if (!img.supported_within(radius))
            throw Error(ErrorCode::OutOfWindow, "image leaves the window");
    return m;
}

Element LinearMapOnWindow::apply(const Element &x) const
{
    Element out(Basis::Plain);
    for (const auto &[g, c] : x.terms()) {
        if (g.basis != Basis::Plain)
            throw Error(ErrorCode::BasisMismatch, "linear maps act on plain-basis elements");
        if (!in_domain(g))
            throw Error(ErrorCode::OutOfWindow,
                        "degree " + std::to_string(g.degree) + " is outside the map's domain");
        auto it = images.find(g);
        if (it != images.end())
            out += c * it->second;
    }
    return out;
}

LinearMapOnWindow LinearMapOnWindow::restricted(std::int64_t r) const
{
    LinearMapOnWindow out;
    out.radius = radius;
    out.lo = std::max(lo, -r);
    out.hi = std::min(hi, r);
    for (const auto &[g, img] : images)
        if (out.in_domain(g))
            out.images.emplace(g, img);
    return out;
}

Element outer_D(const Element &y)
{
    if (y.is_zero())
        return Element(Basis::Plain);
    if (y.basis() != Basis::Plain)
        throw Error(ErrorCode::BasisMismatch, "D is defined on the plain basis");
    Element out(Basis::Plain);
    for (const auto &[g, c] : y.terms())
        if (g.family == Family::I || g.family == Family::J)
            out.add_term(c, g);
    return out;
}

Element apply(const Derivation &d, const Element &y)
{
    if (!y.is_zero() && y.basis() != Basis::Plain)
        throw Error(ErrorCode::BasisMismatch, "derivations act on plain-basis elements");
    Element out = bracket(d.inner, y);
    out += d.outer * outer_D(y);
    return out;
}

bool leibniz_check(const Derivation &d, const Element &x, const Element &y)
{
    return apply(d, bracket(x, y)) == bracket(apply(d, x), y) + bracket(x, apply(d, y));
}

bool leibniz_check(const LinearMapOnWindow &map, const Element &x, const Element &y)
{
    Element xy = bracket(x, y);
    Element dx = map.apply(x);
    Element dy = map.apply(y);
    Element dxy = map.apply(xy);
    return dxy == bracket(dx, y) + bracket(x, dy);
}

namespace {

// Unknowns of the homogeneous solve: u(source, target family) is the
// coefficient of target_{m+degree} in the image of source_m. Indexed in
// generator order of the source, then target family.
struct MapCoordinates {
    std::int64_t radius;
    std::int64_t degree;
    std::int64_t lo;
    std::int64_t hi;

    MapCoordinates(std::int64_t r, std::int64_t d)
        : radius(r), degree(d), lo(std::max(-r, -r - d)), hi(std::min(r, r - d))
    {
    }

    std::size_t span() const { return static_cast<std::size_t>(hi - lo + 1); }
    std::size_t size() const { return span() * 16; }
    bool in_domain(std::int64_t m) const { return m >= lo && m <= hi; }

    std::size_t index(Family source, std::int64_t m, Family target) const
    {
        return ((static_cast<std::size_t>(source) * span() + static_cast<std::size_t>(m - lo)) * 4) +
               static_cast<std::size_t>(target);
    }

    LinearMapOnWindow to_map(const SparseVector &v) const
    {
        LinearMapOnWindow out;
        out.radius = radius;
        out.lo = lo;
        out.hi = hi;
        for (const auto &[idx, c] : v.entries()) {
            const std::size_t target = idx % 4;
            const std::size_t rest = idx / 4;
            const std::size_t source = rest / span();
            const std::int64_t m = lo + static_cast<std::int64_t>(rest % span());
            Generator g{Basis::Plain, kFamilies[source], m};
            auto [it, ins] = out.images.try_emplace(g, Element(Basis::Plain));
            it->second.add_term(c, {Basis::Plain, kFamilies[target], m + degree});
        }
        return out;
    }

    SparseVector from_map(const LinearMapOnWindow &map) const
    {
        SparseVector v;
        for (const auto &[g, img] : map.images) {
            if (!in_domain(g.degree))
                continue;
            for (const auto &[h, c] : img.terms())
                v.add(index(g.family, g.degree, h.family), c);
        }
        return v;
    }
};

// Accumulates one linear row per output generator.
using RowsByOutput = std::map<Generator, SparseVector>;

void add_bracket_rows(RowsByOutput &rows, const GaussianRational &sign, std::size_t unknown, const Generator &a,
                      const Generator &b)
{
    auto t = bracket(a, b);
    if (t)
        rows[t->target].add(unknown, sign * GaussianRational(t->coeff));
}

std::vector<LinearMapOnWindow> to_maps(const MapCoordinates &mc, const std::vector<SparseVector> &vs)
{
    std::vector<LinearMapOnWindow> out;
    out.reserve(vs.size());
    for (const auto &v : vs)
        out.push_back(mc.to_map(v));
    return out;
}

SparseVector restrict_to(const MapCoordinates &mc, const SparseVector &v, std::int64_t r)
{
    SparseVector out;
    for (const auto &[idx, c] : v.entries()) {
        const std::int64_t m = mc.lo + static_cast<std::int64_t>((idx / 4) % mc.span());
        if (std::llabs(m) <= r)
            out.push_back(idx, c);
    }
    return out;
}

} // namespace

DerivationSpace derivation_space(const Window &w, std::int64_t degree)
{
    const std::int64_t N = w.radius();
    const std::int64_t M = w.interior();
    if (std::llabs(degree) > N - M)
        throw Error(ErrorCode::WindowTooSmall, "degree " + std::to_string(degree) +
                                                   " leaves no certified interior at radius " + std::to_string(N) +
                                                   " with interior " + std::to_string(M));
    MapCoordinates mc(N, degree);
    Echelon system(mc.size());
    const GaussianRational one(1), minus_one(-1);

    std::vector<Generator> domain;
    for (Family f : kFamilies)
        for (std::int64_t m = mc.lo; m <= mc.hi; ++m)
            domain.push_back({Basis::Plain, f, m});

    // D[a,b] - [Da,b] - [a,Db] = 0 for every unordered pair a < b whose
    // bracket (when nonzero) is again in the domain.
    for (std::size_t ia = 0; ia < domain.size(); ++ia) {
        const Generator &a = domain[ia];
        for (std::size_t ib = ia + 1; ib < domain.size(); ++ib) {
            const Generator &b = domain[ib];
            auto ab = bracket(a, b);
            if (ab && !mc.in_domain(ab->target.degree))
                continue;
            RowsByOutput rows;
            if (ab) {
                for (Family t : kFamilies)
                    rows[{Basis::Plain, t, ab->target.degree + degree}].add(
                        mc.index(ab->target.family, ab->target.degree, t), GaussianRational(ab->coeff));
            }
            for (Family t : kFamilies) {
                add_bracket_rows(rows, minus_one, mc.index(a.family, a.degree, t),
                                 {Basis::Plain, t, a.degree + degree}, b);
                add_bracket_rows(rows, minus_one, mc.index(b.family, b.degree, t), a,
                                 {Basis::Plain, t, b.degree + degree});
            }
            for (auto &[g, row] : rows)
                if (!row.is_zero())
                    system.add(std::move(row));
        }
    }

    DerivationSpace out;
    out.degree = degree;
    std::vector<SparseVector> solutions = row_space_basis(system.nullspace(), mc.size());
    out.basis = to_maps(mc, solutions);

    std::vector<SparseVector> restricted;
    restricted.reserve(solutions.size());
    for (const auto &s : solutions)
        restricted.push_back(restrict_to(mc, s, M));
    std::vector<SparseVector> interior = row_space_basis(restricted, mc.size());
    out.interior_basis = to_maps(mc, interior);

    // Known derivations of this degree, as maps on the domain.
    std::vector<SparseVector> known;
    auto as_map = [&](const Derivation &d) {
        LinearMapOnWindow map;
        map.radius = N;
        map.lo = mc.lo;
        map.hi = mc.hi;
        for (const auto &g : domain) {
            Element img = apply(d, g);
            if (!img.is_zero())
                map.images.emplace(g, img);
        }
        return mc.from_map(map);
    };
    for (Family f : kFamilies)
        known.push_back(restrict_to(mc, as_map(ad(Generator{Basis::Plain, f, degree})), M));
    if (degree == 0) {
        SparseVector d_full = as_map(outer_derivation());
        known.push_back(restrict_to(mc, d_full, M));
        Echelon full(mc.size());
        for (const auto &s : solutions)
            full.add(s);
        out.contains_outer = full.contains(d_full);
    }
    std::vector<SparseVector> expected = row_space_basis(known, mc.size());
    out.expected_basis = to_maps(mc, expected);
    out.matches_expected = (interior == expected);
    return out;
}

namespace {

// Inner generators of the window in generator order, then D last.
struct DerivationCoordinates {
    GeneratorIndex index;

    explicit DerivationCoordinates(GeneratorIndex idx) : index(std::move(idx)) {}

    std::size_t size() const { return index.size() + 1; }
    std::size_t outer_index() const { return index.size(); }

    Derivation to_derivation(const SparseVector &v) const
    {
        Derivation d;
        for (const auto &[i, c] : v.entries()) {
            if (i == outer_index())
                d.outer = c;
            else
                d.inner.add_term(c, index.at(i));
        }
        return d;
    }

    SparseVector from_derivation(const Derivation &d) const
    {
        SparseVector v = index.coordinates(d.inner);
        v.push_back(outer_index(), d.outer);
        return v;
    }
};

} // namespace

std::optional<DerivationAffineSpace>
solve_derivations(const std::vector<std::pair<Element, Element>> &conditions, std::int64_t radius)
{
    DerivationCoordinates dc(GeneratorIndex::window(radius));
    AffineSystem system(dc.size());
    for (const auto &[point, value] : conditions) {
        if (!point.is_zero() && point.basis() != Basis::Plain)
            throw Error(ErrorCode::BasisMismatch, "derivation conditions use the plain basis");
        if (!value.is_zero() && value.basis() != Basis::Plain)
            throw Error(ErrorCode::BasisMismatch, "derivation conditions use the plain basis");
        RowsByOutput rows;
        for (std::size_t k = 0; k < dc.index.size(); ++k) {
            const Generator &g = dc.index.at(k);
            for (const auto &[h, c] : point.terms()) {
                auto t = bracket(g, h);
                if (t)
                    rows[t->target].add(k, c * GaussianRational(t->coeff));
            }
        }
        const Element fixed = outer_D(point);
        for (const auto &[h, c] : fixed.terms())
            rows[h].add(dc.outer_index(), c);
        std::set<Generator> outputs;
        for (const auto &[g, r] : rows)
            outputs.insert(g);
        for (const auto &[g, c] : value.terms())
            outputs.insert(g);
        for (const auto &g : outputs) {
            auto it = rows.find(g);
            system.add_equation(it == rows.end() ? SparseVector() : it->second, value.coeff(g));
        }
    }
    auto sol = system.solve();
    if (!sol)
        return std::nullopt;
    DerivationAffineSpace out;
    out.particular = dc.to_derivation(sol->particular);
    for (const auto &v : row_space_basis(sol->homogeneous, dc.size()))
        out.homogeneous.push_back(dc.to_derivation(v));
    return out;
}

std::vector<Derivation> joint_annihilator(const std::vector<Element> &points, const Window &w)
{
    std::vector<std::pair<Element, Element>> conditions;
    for (const auto &p : points) {
        if (!w.in_window(p))
            throw Error(ErrorCode::WindowTooSmall, "annihilator point leaves the window");
        conditions.emplace_back(p, Element(Basis::Plain));
    }
    return solve_derivations(conditions, w.radius())->homogeneous;
}

std::vector<Derivation> annihilator(const Element &x, const Window &w)
{
    if (!w.in_interior(x))
        throw Error(ErrorCode::WindowTooSmall, "annihilator point must lie in the interior");
    return joint_annihilator({x}, w);
}

std::vector<Element> center_check(const Window &w)
{
    GeneratorIndex interior = GeneratorIndex::window(w.interior());
    GeneratorIndex window = GeneratorIndex::window(w.radius());
    Echelon system(interior.size());
    for (std::size_t j = 0; j < window.size(); ++j) {
        RowsByOutput rows;
        for (std::size_t k = 0; k < interior.size(); ++k) {
            auto t = bracket(interior.at(k), window.at(j));
            if (t)
                rows[t->target].add(k, GaussianRational(t->coeff));
        }
        for (auto &[g, r] : rows)
            system.add(std::move(r));
    }
    std::vector<Element> out;
    for (const auto &v : row_space_basis(system.nullspace(), interior.size()))
        out.push_back(interior.element(v));
    return out;
}

std::vector<Derivation> derivation_span_basis(const std::vector<Derivation> &ds)
{
    std::vector<Element> inners;
    for (const auto &d : ds)
        inners.push_back(d.inner);
    DerivationCoordinates dc(GeneratorIndex::covering(inners));
    std::vector<SparseVector> vs;
    for (const auto &d : ds)
        vs.push_back(dc.from_derivation(d));
    std::vector<Derivation> out;
    for (const auto &v : row_space_basis(vs, dc.size()))
        out.push_back(dc.to_derivation(v));
    return out;
}

} // namespace pgca
