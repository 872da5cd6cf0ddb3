#include "pgca/twolocal.hpp"

#include "pgca/algebra.hpp"
#include "pgca/error.hpp"
#include "pgca/exprio.hpp"

#include <string>

namespace pgca {

namespace {

std::string entry_path(std::size_t k, const char *field) { return "/table/" + std::to_string(k) + "/" + field; }

// k with y = k x, if any.
std::optional<GaussianRational> proportionality(const Element &x, const Element &y)
{
    if (x.is_zero() || y.is_zero() || x.size() != y.size())
        return std::nullopt;
    const auto &[g, c] = *x.terms().begin();
    GaussianRational k = y.coeff(g) / c;
    if (k.is_zero() || !(k * x == y))
        return std::nullopt;
    return k;
}

} // namespace

TwoLocalInstance::TwoLocalInstance(Window window, std::vector<Entry> table)
    : window_(window), table_(std::move(table))
{
    for (std::size_t k = 0; k < table_.size(); ++k) {
        const Entry &e = table_[k];
        if (e.point.is_zero())
            throw SchemaError(entry_path(k, "point"), "table points must be nonzero");
        if (e.point.basis() != Basis::Plain)
            throw SchemaError(entry_path(k, "point"), "table points must use the plain basis");
        if (!e.value.is_zero() && e.value.basis() != Basis::Plain)
            throw SchemaError(entry_path(k, "value"), "table values must use the plain basis");
        if (!window_.in_interior(e.point))
            throw SchemaError(entry_path(k, "point"), "table point leaves the interior [-" +
                                                          std::to_string(window_.interior()) + ", " +
                                                          std::to_string(window_.interior()) + "]");
        for (std::size_t j = 0; j < k; ++j)
            if (table_[j].point == e.point)
                throw SchemaError(entry_path(k, "point"), "duplicate point " + print_element(e.point));
    }
}

std::optional<Element> TwoLocalInstance::value_at(const Element &point) const
{
    for (const auto &e : table_)
        if (e.point == point)
            return e.value;
    return std::nullopt;
}

TwoLocalInstance TwoLocalInstance::induced_by(const Derivation &d, const std::vector<Element> &points, Window window)
{
    std::vector<Entry> table;
    table.reserve(points.size());
    for (const auto &p : points)
        table.push_back({p, apply(d, p)});
    return {window, std::move(table)};
}

TwoLocalInstance TwoLocalInstance::scaled_values(const GaussianRational &k) const
{
    std::vector<Entry> table = table_;
    for (auto &e : table)
        e.value *= k;
    return {window_, std::move(table)};
}

std::vector<Element> anchor_points() { return {L(0), L(1), I(0) + J(0)}; }

WitnessSpace witness_solve(const Element &x, const Element &vx, const Element &y, const Element &vy,
                           const Window &w)
{
    if (!w.in_interior(x) || !w.in_interior(y))
        throw Error(ErrorCode::WindowTooSmall, "witness points must lie in the interior");
    auto space = solve_derivations({{x, vx}, {y, vy}}, w.radius());
    if (!space)
        throw Error(ErrorCode::InfeasibleWitness,
                    "no derivation maps " + print_element(x) + " to " + print_element(vx) + " and " +
                        print_element(y) + " to " + print_element(vy),
                    print_element(x));
    return {std::move(space->particular), std::move(space->homogeneous)};
}

bool validate_homogeneity(const TwoLocalInstance &inst)
{
    const auto &t = inst.table();
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (auto k = proportionality(t[a].point, t[b].point); k && !(*k * t[a].value == t[b].value))
                return false;
    return true;
}

namespace {

Element required_value(const TwoLocalInstance &inst, const Element &anchor)
{
    auto v = inst.value_at(anchor);
    if (!v)
        throw Error(ErrorCode::MissingAnchor, "table lacks the anchor point " + print_element(anchor),
                    print_element(anchor));
    return *v;
}

void check_homogeneity(const TwoLocalInstance &inst)
{
    const auto &t = inst.table();
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (auto k = proportionality(t[a].point, t[b].point); k && !(*k * t[a].value == t[b].value))
                throw Error(ErrorCode::TableMismatch,
                            "values at proportional points " + print_element(t[a].point) + " and " +
                                print_element(t[b].point) + " do not scale together",
                            print_element(t[b].point));
}

} // namespace

Derivation extract_derivation(const TwoLocalInstance &inst)
{
    const Element l0 = L(0), l1 = L(1);
    Element v0 = required_value(inst, l0);
    Element v1 = required_value(inst, l1);
    required_value(inst, I(0) + J(0));
    WitnessSpace ws = witness_solve(l0, v0, l1, v1, inst.window());
    return extract_derivation(inst, ws.particular);
}

Derivation extract_derivation(const TwoLocalInstance &inst, const Derivation &first_witness)
{
    const Element l0 = L(0), l1 = L(1), sum = I(0) + J(0);
    Element v0 = required_value(inst, l0);
    Element v1 = required_value(inst, l1);
    Element vsum = required_value(inst, sum);
    check_homogeneity(inst);
    if (!(apply(first_witness, l0) == v0) || !(apply(first_witness, l1) == v1))
        throw Error(ErrorCode::InfeasibleWitness, "first witness disagrees with the table at L[0] or L[1]");

    // Residual at I_0 + J_0 must be mu (I_0 - J_0) + nu (I_0 + J_0).
    Element r = vsum - apply(first_witness, sum);
    for (const auto &[g, c] : r.terms())
        if (g.degree != 0 || (g.family != Family::I && g.family != Family::J))
            throw Error(ErrorCode::NotInSpan,
                        "residual " + print_element(r) + " at I[0] + J[0] is not in span{I[0], J[0]}",
                        print_element(sum));
    const GaussianRational vi = r.coeff(I(0));
    const GaussianRational vj = r.coeff(J(0));
    const GaussianRational half(Rational(1, 2));
    const GaussianRational mu = (vi - vj) * half;
    const GaussianRational nu = (vi + vj) * half;

    Derivation delta = first_witness + mu * ad(H(0)) + outer_derivation(nu);
    for (const auto &e : inst.table()) {
        Element got = apply(delta, e.point);
        if (!(got == e.value))
            throw Error(ErrorCode::TableMismatch,
                        "extracted derivation sends " + print_element(e.point) + " to " + print_element(got) +
                            " but the table says " + print_element(e.value),
                        print_element(e.point));
    }
    return delta;
}

} // namespace pgca
