#include "pgca/fuzz.hpp"

#include "pgca/algebra.hpp"
#include "pgca/exprio.hpp"

namespace pgca {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

GaussianRational Sampler::scalar(bool allow_zero)
{
    for (;;) {
        Rational re(uniform(-5, 5), uniform(1, 3));
        Rational im = coin() ? Rational(uniform(-5, 5), uniform(1, 3)) : Rational(0);
        GaussianRational z(re, im);
        if (allow_zero || !z.is_zero())
            return z;
    }
}

Element Sampler::element(Basis basis, std::int64_t radius, int max_terms)
{
    Element out(basis);
    const auto n = uniform(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k)
        out.add_term(scalar(), {basis, kFamilies[uniform(0, 3)], uniform(-radius, radius)});
    return out;
}

Element Sampler::nonzero_element(Basis basis, std::int64_t radius, int max_terms)
{
    for (;;) {
        Element x = element(basis, radius, max_terms);
        if (!x.is_zero())
            return x;
    }
}

Derivation Sampler::derivation(std::int64_t radius, int max_terms)
{
    Derivation d;
    d.inner = element(Basis::Plain, radius, max_terms);
    d.outer = scalar(true);
    return d;
}

namespace {

bool still_fails(const FuzzProperty &property, const FuzzSample &s)
{
    try {
        return !property(s);
    } catch (...) {
        return true;
    }
}

} // namespace

FuzzSample shrink_counterexample(const FuzzProperty &property, FuzzSample failing)
{
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < failing.elements.size() && !progress; ++k) {
            const Element &x = failing.elements[k];
            for (const auto &[g, c] : x.terms()) {
                FuzzSample candidate = failing;
                candidate.elements[k].add_term(-c, g);
                if (still_fails(property, candidate)) {
                    failing = std::move(candidate);
                    progress = true;
                    break;
                }
                if (!(c == GaussianRational(1))) {
                    candidate = failing;
                    candidate.elements[k].add_term(GaussianRational(1) - c, g);
                    if (still_fails(property, candidate)) {
                        failing = std::move(candidate);
                        progress = true;
                        break;
                    }
                }
            }
        }
        if (!progress && !failing.scalar.is_zero()) {
            for (const GaussianRational &v : {GaussianRational(0), GaussianRational(1)}) {
                if (failing.scalar == v)
                    continue;
                FuzzSample candidate = failing;
                candidate.scalar = v;
                if (still_fails(property, candidate)) {
                    failing = std::move(candidate);
                    progress = true;
                    break;
                }
            }
        }
    }
    return failing;
}

FuzzOutcome fuzz(const FuzzProperty &property, const FuzzGenerator &generate, std::int64_t samples,
                 std::uint64_t seed)
{
    Sampler sampler(seed);
    FuzzOutcome out;
    for (std::int64_t k = 0; k < samples; ++k) {
        FuzzSample s = generate(sampler);
        ++out.samples_run;
        if (still_fails(property, s)) {
            out.counterexample = shrink_counterexample(property, std::move(s));
            out.failing_sample = k;
            break;
        }
    }
    return out;
}

std::optional<FuzzTarget> parse_fuzz_target(const std::string &name)
{
    if (name == "jacobi")
        return FuzzTarget::Jacobi;
    if (name == "isomorphism")
        return FuzzTarget::Isomorphism;
    if (name == "leibniz")
        return FuzzTarget::Leibniz;
    return std::nullopt;
}

Report run_fuzz(FuzzTarget target, std::int64_t radius, std::int64_t samples, std::uint64_t seed)
{
    FuzzProperty property;
    FuzzGenerator generate;
    std::string name;
    switch (target) {
    case FuzzTarget::Jacobi:
        name = "jacobi";
        generate = [radius](Sampler &s) {
            Basis b = s.coin() ? Basis::Bold : Basis::Plain;
            return FuzzSample{{s.element(b, radius), s.element(b, radius), s.element(b, radius)}, {}};
        };
        property = [](const FuzzSample &s) {
            const Element &x = s.elements[0], &y = s.elements[1], &z = s.elements[2];
            Element jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
            return jac.is_zero() && bracket(x, y) == -bracket(y, x);
        };
        break;
    case FuzzTarget::Isomorphism:
        name = "isomorphism";
        generate = [radius](Sampler &s) {
            return FuzzSample{{s.element(Basis::Plain, radius), s.element(Basis::Plain, radius)}, {}};
        };
        property = [](const FuzzSample &s) {
            const Element &x = s.elements[0], &y = s.elements[1];
            return to_bold(bracket(x, y)) == bracket(to_bold(x), to_bold(y)) && to_plain(to_bold(x)) == x &&
                   to_bold(to_plain(to_bold(y))) == to_bold(y);
        };
        break;
    case FuzzTarget::Leibniz:
        name = "leibniz";
        generate = [radius](Sampler &s) {
            Derivation d = s.derivation(radius);
            return FuzzSample{{d.inner, s.element(Basis::Plain, radius), s.element(Basis::Plain, radius)}, d.outer};
        };
        property = [](const FuzzSample &s) {
            return leibniz_check(Derivation{s.elements[0], s.scalar}, s.elements[1], s.elements[2]);
        };
        break;
    }

    FuzzOutcome outcome = fuzz(property, generate, samples, seed);
    Report r;
    r.name = "fuzz-" + name;
    r.param("what", name)
        .param("window", std::to_string(radius))
        .param("samples", std::to_string(samples))
        .param("seed", std::to_string(seed));
    r.dimension("samples_run", outcome.samples_run);
    r.dimension("failures", outcome.counterexample ? 1 : 0);
    r.pass = !outcome.counterexample;
    if (outcome.counterexample) {
        std::vector<std::string> members;
        for (const auto &x : outcome.counterexample->elements)
            members.push_back(print_element(x));
        r.basis("counterexample", std::move(members));
        r.fact("counterexample_scalar", print_scalar(outcome.counterexample->scalar));
        r.fact("failing_sample", std::to_string(outcome.failing_sample));
    }
    return r;
}

} // namespace pgca
