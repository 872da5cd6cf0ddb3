#include "pgca/algebra.hpp"
#include "pgca/error.hpp"
#include "pgca/exprio.hpp"
#include "pgca/twolocal.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pgca {

namespace {

std::vector<std::string> texts(const std::vector<Derivation> &ds)
{
    std::vector<std::string> out;
    for (const auto &d : ds)
        out.push_back(print_derivation(d));
    return out;
}

std::vector<std::string> texts(const std::vector<Element> &xs)
{
    std::vector<std::string> out;
    for (const auto &x : xs)
        out.push_back(print_element(x));
    return out;
}

bool derivation_span_contains(const std::vector<Derivation> &basis, const Derivation &d)
{
    std::vector<Derivation> extended = basis;
    extended.push_back(d);
    return derivation_span_basis(extended).size() == derivation_span_basis(basis).size();
}

// Throws ReplayFailed naming the first vector of either side outside the other.
void require_equal_spans(const std::vector<Derivation> &computed, const std::vector<Derivation> &expected,
                         const std::string &what)
{
    for (const auto &d : computed)
        if (!derivation_span_contains(expected, d))
            throw Error(ErrorCode::ReplayFailed, what + ": solver basis vector " + print_derivation(d) +
                                                     " lies outside the stated span",
                        print_derivation(d));
    for (const auto &d : expected)
        if (!derivation_span_contains(computed, d))
            throw Error(ErrorCode::ReplayFailed, what + ": stated derivation " + print_derivation(d) +
                                                     " is missing from the solver's space",
                        print_derivation(d));
}

std::vector<Element> values_at(const std::vector<Derivation> &ds, const Element &x)
{
    std::vector<Element> vs;
    vs.reserve(ds.size());
    for (const auto &d : ds)
        vs.push_back(apply(d, x));
    return span_basis(vs);
}

void require_plain_interior(const Element &x, const Window &w)
{
    if (!x.is_zero() && x.basis() != Basis::Plain)
        throw Error(ErrorCode::BasisMismatch, "replays work in the plain basis");
    if (!w.in_interior(x))
        throw Error(ErrorCode::WindowTooSmall, print_element(x) + " leaves the interior [-" +
                                                   std::to_string(w.interior()) + ", " +
                                                   std::to_string(w.interior()) + "]");
}

std::string join(const std::vector<std::int64_t> &xs)
{
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
        out += (k ? "," : "") + std::to_string(xs[k]);
    return out;
}

std::vector<std::int64_t> checked_probes(std::optional<std::vector<std::int64_t>> probes, const Element &x)
{
    std::vector<std::int64_t> ps = probes ? std::move(*probes) : default_probes(x);
    if (ps.empty())
        throw std::invalid_argument("probe set must not be empty");
    std::vector<std::int64_t> sorted = ps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("probe indices must be distinct");
    return ps;
}

Report base_report(std::string name, const Window &w)
{
    Report r;
    r.name = std::move(name);
    r.param("window", std::to_string(w.radius())).param("interior", std::to_string(w.interior()));
    return r;
}

} // namespace

std::vector<std::int64_t> default_probes(const Element &x)
{
    const std::int64_t R = x.max_abs_degree();
    const std::int64_t S = 2 * (1 + R);
    return {S + 1, -(S + 1), S + 2 * R + 2};
}

std::vector<Element> value_family(const Element &x)
{
    Element minus(Basis::Plain), plus(Basis::Plain);
    for (const auto &[g, c] : x.terms()) {
        if (g.family == Family::I) {
            minus.add_term(c, g);
            plus.add_term(c, g);
        } else if (g.family == Family::J) {
            minus.add_term(-c, g);
            plus.add_term(c, g);
        }
    }
    return span_basis({minus, plus});
}

std::string vanishing_case(const Element &x)
{
    bool alpha = false, beta_off = false, beta_zero = false;
    for (const auto &[g, c] : x.terms()) {
        if (g.family == Family::L)
            alpha = true;
        else if (g.family == Family::H)
            (g.degree == 0 ? beta_zero : beta_off) = true;
    }
    if (alpha)
        return "alpha-nonzero";
    if (beta_off)
        return "beta-off-zero";
    if (beta_zero)
        return "beta-at-zero";
    return "alpha-beta-zero";
}

Report replay_annihilator_of_l(std::int64_t i, const Window &w)
{
    const Element x = L(i);
    require_plain_interior(x, w);
    std::vector<Derivation> computed = annihilator(x, w);
    std::vector<Derivation> expected =
        derivation_span_basis({ad(L(i)), ad(H(0)), ad(I(i)), ad(J(i)), outer_derivation()});
    require_equal_spans(computed, expected, "annihilator of " + print_element(x));

    Report r = base_report("annihilator-L", w);
    r.param("i", std::to_string(i));
    r.pass = true;
    r.dimension("annihilator", static_cast<std::int64_t>(computed.size()));
    r.basis("annihilator", texts(derivation_span_basis(computed)));
    return r;
}

Report replay_annihilator_of_i0j0(const Window &w)
{
    const Element x = I(0) + J(0);
    std::vector<Derivation> computed = annihilator(x, w);
    std::vector<Derivation> stated{ad(L(0))};
    for (std::int64_t k = -w.radius(); k <= w.radius(); ++k) {
        stated.push_back(ad(I(k)));
        stated.push_back(ad(J(k)));
    }
    require_equal_spans(computed, derivation_span_basis(stated), "annihilator of I[0] + J[0]");
    for (const auto &d : computed)
        if (!d.outer.is_zero())
            throw Error(ErrorCode::ReplayFailed, "D survives in the annihilator of I[0] + J[0]",
                        print_derivation(d));

    Report r = base_report("annihilator-I0J0", w);
    r.pass = true;
    r.dimension("annihilator", static_cast<std::int64_t>(computed.size()));
    r.fact("outer_coefficient", "forced-zero");
    r.basis("annihilator", texts(derivation_span_basis(computed)));
    return r;
}

Report replay_vanishing_on_l(std::int64_t i, const Window &w)
{
    if (std::llabs(i) > w.radius())
        throw Error(ErrorCode::WindowTooSmall, "L[" + std::to_string(i) + "] leaves the window");
    const Element target = L(i);
    std::vector<Element> from_l0 = values_at(annihilator(L(0), w), target);
    std::vector<Element> from_l1 = values_at(annihilator(L(1), w), target);
    std::vector<Element> common = intersect_element_spans(from_l0, from_l1);
    if (!common.empty())
        throw Error(ErrorCode::ReplayFailed,
                    "nonzero value " + print_element(common.front()) + " admissible at " + print_element(target),
                    print_element(common.front()));

    Report r = base_report("vanishing-on-L", w);
    r.param("i", std::to_string(i));
    r.pass = true;
    r.dimension("values_from_L0", static_cast<std::int64_t>(from_l0.size()));
    r.dimension("values_from_L1", static_cast<std::int64_t>(from_l1.size()));
    r.dimension("deduced_values", static_cast<std::int64_t>(common.size()));
    r.basis("deduced_values", texts(common));
    return r;
}

Report replay_value_family(const Element &x, std::optional<std::vector<std::int64_t>> probes, const Window &w)
{
    require_plain_interior(x, w);
    std::vector<std::int64_t> ps = checked_probes(std::move(probes), x);
    for (auto i : ps)
        if (std::llabs(i) > w.radius())
            throw Error(ErrorCode::WindowTooSmall, "probe L[" + std::to_string(i) + "] leaves the window");

    std::vector<Element> admissible;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        std::vector<Element> vs = values_at(joint_annihilator({L(ps[k])}, w), x);
        admissible = k == 0 ? vs : intersect_element_spans(admissible, vs);
    }
    std::vector<Element> family = value_family(x);
    for (const auto &f : family)
        if (!span_contains(admissible, f))
            throw Error(ErrorCode::ReplayFailed, "family member " + print_element(f) + " is not admissible",
                        print_element(f));
    if (admissible.size() > family.size()) {
        for (const auto &a : admissible)
            if (!span_contains(family, a))
                throw Error(ErrorCode::ProbeSetTooSmall,
                            "probes {" + join(ps) + "} leave " + print_element(a) + " admissible",
                            print_element(a));
    }

    Report r = base_report("value-family", w);
    r.param("x", print_element(x)).param("probes", join(ps));
    r.pass = true;
    r.dimension("family", static_cast<std::int64_t>(family.size()));
    r.dimension("admissible_values", static_cast<std::int64_t>(admissible.size()));
    r.basis("admissible_values", texts(admissible));
    return r;
}

Report replay_probe_annihilator(std::int64_t p, const Window &w)
{
    if (p == 0)
        throw std::invalid_argument("p must be nonzero");
    if (3 * std::llabs(p) > w.interior())
        throw Error(ErrorCode::WindowTooSmall, "3|p| must fit in the interior");
    const Element x = L(p) + I(2 * p) + J(2 * p);

    std::vector<Element> family = value_family(x);
    std::vector<Element> from_sum = values_at(annihilator(I(0) + J(0), w), x);
    std::vector<Element> forced = intersect_element_spans(family, from_sum);
    if (!forced.empty())
        throw Error(ErrorCode::ReplayFailed,
                    "value " + print_element(forced.front()) + " at " + print_element(x) + " is not forced to 0",
                    print_element(forced.front()));

    std::vector<Derivation> computed = annihilator(x, w);
    require_equal_spans(computed, derivation_span_basis({ad(x), ad(I(p)), ad(J(p))}),
                        "annihilator of " + print_element(x));

    Report r = base_report("probe-annihilator", w);
    r.param("p", std::to_string(p));
    r.pass = true;
    r.dimension("forced_value", static_cast<std::int64_t>(forced.size()));
    r.dimension("annihilator", static_cast<std::int64_t>(computed.size()));
    r.basis("annihilator", texts(derivation_span_basis(computed)));
    return r;
}

Report replay_vanishing_everywhere(const Element &x, std::optional<std::vector<std::int64_t>> probes,
                                   const Window &w)
{
    require_plain_interior(x, w);
    std::vector<std::int64_t> ps = checked_probes(std::move(probes), x);
    const std::string which = vanishing_case(x);

    std::vector<Element> admissible = value_family(x);
    for (auto p : ps) {
        if (p == 0)
            throw std::invalid_argument("probe indices must be nonzero");
        const Element probe = L(p) + I(2 * p) + J(2 * p);
        std::vector<Element> vs = span_basis({bracket(probe, x), bracket(I(p), x), bracket(J(p), x)});
        admissible = intersect_element_spans(admissible, vs);
    }
    if (!admissible.empty())
        throw Error(ErrorCode::ProbeSetTooSmall,
                    "probes {" + join(ps) + "} leave " + print_element(admissible.front()) + " admissible",
                    print_element(admissible.front()));

    Report r = base_report("vanishing-everywhere", w);
    r.param("x", print_element(x)).param("probes", join(ps));
    r.pass = true;
    r.fact("case", which);
    r.dimension("family", static_cast<std::int64_t>(value_family(x).size()));
    r.dimension("admissible_values", 0);
    return r;
}

} // namespace pgca
